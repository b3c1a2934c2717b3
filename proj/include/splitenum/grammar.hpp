#pragma once

// Grammar expressions over combinatorial constructions (atoms, unions,
// products, multiset/set and sequence constructions), rule systems with a
// signed entry combination, validation, and exact evaluation of the least
// fixed point under unlabeled (ordinary) or labeled (exponential) semantics.

#include "splitenum/series.hpp"

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace splitenum {

enum class ExprKind {
    atom,         // single unlabeled/labeled atom, series z
    rooted_atom,  // same series as atom; marks the root in rooted systems
    ref,          // reference to a named rule
    union_,       // disjoint union (sum)
    product,      // cartesian/labeled product
    set_atleast,  // multisets (unlabeled) or sets (labeled) with >= k elements
    set_exact,    // exactly k elements
    seq_atleast,  // sequences with >= k elements
};

struct GrammarExpr {
    ExprKind kind = ExprKind::atom;
    std::string name;                // ref only
    std::vector<GrammarExpr> args;   // union/product children; single child for set/seq
    int k = 0;                       // set/seq bound

    static GrammarExpr atom();
    static GrammarExpr rooted_atom();
    static GrammarExpr ref(std::string rule);
    static GrammarExpr add(std::vector<GrammarExpr> parts);
    static GrammarExpr mul(std::vector<GrammarExpr> parts);
    static GrammarExpr set_atleast(GrammarExpr arg, int k);
    static GrammarExpr set_exact(GrammarExpr arg, int k);
    static GrammarExpr seq_atleast(GrammarExpr arg, int k);

    bool operator==(const GrammarExpr& o) const;
};

struct EntryTerm {
    int sign = 1;  // +1 or -1
    std::string rule;
    bool operator==(const EntryTerm& o) const { return sign == o.sign && rule == o.rule; }
};

struct RuleSystem {
    std::map<std::string, GrammarExpr> rules;
    std::vector<EntryTerm> entry;
    bool operator==(const RuleSystem& o) const { return rules == o.rules && entry == o.entry; }
};

enum class Semantics { unlabeled, labeled };

// sweep: restart-from-zero whole-series sweeps until stable (the audit path,
//   at most N+2 sweeps for a well-founded system).
// frontier: degree-synchronous incremental recurrences, same results, used
//   for large truncation degrees.
// automatic: sweep for N <= 64, frontier above.
enum class EvalStrategy { automatic, sweep, frontier };

struct EvalStats {
    std::string strategy;
    int sweeps = 0;       // sweep engine only, counts the final stable sweep
    bool monotone = true; // per-coefficient values never decreased across sweeps
};

struct evaluation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Empty when the system is well formed: all refs resolve, set/seq arguments
// have positive valuation, every rule has valuation >= 1, and no dependency
// cycle can feed a coefficient back into itself at the same degree.
std::vector<std::string> validate(const RuleSystem& system);

// Least fixed point of the rule system truncated at degree N. Labeled
// semantics evaluates exponential generating functions over exact rationals
// and returns integer counts n! * [z^n] (integrality asserted).
// Throws std::invalid_argument when validate() reports problems.
std::map<std::string, Series> evaluate(const RuleSystem& system, Semantics semantics, int N,
                                       EvalStrategy strategy = EvalStrategy::automatic,
                                       EvalStats* stats = nullptr);

// Signed sum of rule series per the entry combination. Throws
// evaluation_error if any resulting coefficient is negative.
Series combine_entry(const RuleSystem& system, const std::map<std::string, Series>& values);

// Convenience: evaluate then combine.
Series evaluate_entry(const RuleSystem& system, Semantics semantics, int N,
                      EvalStrategy strategy = EvalStrategy::automatic);

nlohmann::json system_to_json(const RuleSystem& system);
RuleSystem system_from_json(const nlohmann::json& j);

}  // namespace splitenum
