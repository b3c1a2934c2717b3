#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <splitenum/grammar.hpp>
#include <splitenum/graphs.hpp>
#include <splitenum/series.hpp>

namespace splitenum {

enum class Variant { labeled_rooted, labeled_unrooted, unlabeled_rooted, unlabeled_unrooted };

// "labeled-rooted", "labeled-unrooted", "unlabeled-rooted", "unlabeled-unrooted"
std::string variant_name(Variant v);
Variant variant_from_name(const std::string& name);  // throws std::invalid_argument
const std::vector<Variant>& all_variants();

struct ClassDefinition {
    std::string name;
    GraphClass predicate;        // the membership test this enumeration must agree with
    RuleSystem rooted_system;    // entry: the class rooted at a vertex
    RuleSystem unrooted_system;  // entry: signed combination of rerooted trees
    // Explicit counts for the one-vertex and one-edge graphs. The rule
    // systems describe trees with an internal node, hence three or more
    // vertices; these two sizes are overlaid afterwards.
    std::map<std::pair<Variant, int>, long> base_cases;
    // Admissible sizes: n % size_modulus == size_residue. Off-sizes must
    // come out zero; that is asserted, never masked.
    int size_modulus = 1;
    int size_residue = 0;
    std::map<Variant, std::string> oeis;  // ids where known
};

const std::vector<ClassDefinition>& all_classes();
const ClassDefinition& class_by_name(const std::string& name);  // throws std::invalid_argument

// Counting series for one variant, truncated at degree N >= 1. Labeled
// variants count labeled graphs (integer counts), unlabeled variants count
// isomorphism classes. labeled-unrooted divides the rooted labeled count by
// n, asserting divisibility.
Series enumerate_class(const ClassDefinition& cls, Variant v, int N,
                       EvalStrategy strategy = EvalStrategy::automatic);

struct ClassInfo {
    std::string name;
    int rooted_rules = 0;
    int unrooted_rules = 0;
    std::map<Variant, std::string> oeis;
};

std::vector<ClassInfo> list_classes();

}  // namespace splitenum
