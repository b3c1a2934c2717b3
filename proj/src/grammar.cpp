#include "splitenum/grammar.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace splitenum {

GrammarExpr GrammarExpr::atom() {
    GrammarExpr e;
    e.kind = ExprKind::atom;
    return e;
}

GrammarExpr GrammarExpr::rooted_atom() {
    GrammarExpr e;
    e.kind = ExprKind::rooted_atom;
    return e;
}

GrammarExpr GrammarExpr::ref(std::string rule) {
    GrammarExpr e;
    e.kind = ExprKind::ref;
    e.name = std::move(rule);
    return e;
}

GrammarExpr GrammarExpr::add(std::vector<GrammarExpr> parts) {
    GrammarExpr e;
    e.kind = ExprKind::union_;
    e.args = std::move(parts);
    return e;
}

GrammarExpr GrammarExpr::mul(std::vector<GrammarExpr> parts) {
    GrammarExpr e;
    e.kind = ExprKind::product;
    e.args = std::move(parts);
    return e;
}

GrammarExpr GrammarExpr::set_atleast(GrammarExpr arg, int k) {
    GrammarExpr e;
    e.kind = ExprKind::set_atleast;
    e.args.push_back(std::move(arg));
    e.k = k;
    return e;
}

GrammarExpr GrammarExpr::set_exact(GrammarExpr arg, int k) {
    GrammarExpr e;
    e.kind = ExprKind::set_exact;
    e.args.push_back(std::move(arg));
    e.k = k;
    return e;
}

GrammarExpr GrammarExpr::seq_atleast(GrammarExpr arg, int k) {
    GrammarExpr e;
    e.kind = ExprKind::seq_atleast;
    e.args.push_back(std::move(arg));
    e.k = k;
    return e;
}

bool GrammarExpr::operator==(const GrammarExpr& o) const {
    return kind == o.kind && name == o.name && k == o.k && args == o.args;
}

// ---------------------------------------------------------------------------
// validation

namespace {

constexpr long long kValInf = 1LL << 60;

long long val_add(long long a, long long b) {
    return (a >= kValInf || b >= kValInf) ? kValInf : a + b;
}

bool is_setseq(ExprKind k) {
    return k == ExprKind::set_atleast || k == ExprKind::set_exact || k == ExprKind::seq_atleast;
}

long long expr_valuation(const GrammarExpr& e, const std::map<std::string, long long>& rv) {
    switch (e.kind) {
        case ExprKind::atom:
        case ExprKind::rooted_atom:
            return 1;
        case ExprKind::ref: {
            auto it = rv.find(e.name);
            return it == rv.end() ? kValInf : it->second;
        }
        case ExprKind::union_: {
            long long m = kValInf;
            for (const auto& a : e.args) m = std::min(m, expr_valuation(a, rv));
            return m;
        }
        case ExprKind::product: {
            long long s = 0;
            for (const auto& a : e.args) s = val_add(s, expr_valuation(a, rv));
            return s;
        }
        case ExprKind::set_atleast:
        case ExprKind::set_exact:
        case ExprKind::seq_atleast: {
            if (e.k == 0) return 0;
            long long v = expr_valuation(e.args[0], rv);
            return v >= kValInf ? kValInf : v * e.k;
        }
    }
    return kValInf;
}

void walk(const GrammarExpr& e, const std::function<void(const GrammarExpr&)>& f) {
    f(e);
    for (const auto& a : e.args) walk(a, f);
}

// Rules whose coefficient at degree n can feed this expression's coefficient
// at the same degree n. Any cycle along these edges defeats degree-by-degree
// convergence.
void collect_passthrough(const GrammarExpr& e, const std::map<std::string, long long>& rv,
                         std::set<std::string>& out) {
    switch (e.kind) {
        case ExprKind::ref:
            out.insert(e.name);
            break;
        case ExprKind::union_:
            for (const auto& a : e.args) collect_passthrough(a, rv, out);
            break;
        case ExprKind::product:
            for (size_t i = 0; i < e.args.size(); ++i) {
                bool others_zero = true;
                for (size_t j = 0; j < e.args.size() && others_zero; ++j)
                    if (j != i && expr_valuation(e.args[j], rv) != 0) others_zero = false;
                if (others_zero) collect_passthrough(e.args[i], rv, out);
            }
            break;
        case ExprKind::set_atleast:
        case ExprKind::seq_atleast:
            // the single-element layer (and for the full construction the
            // one-part term) copies the argument's coefficient directly
            if (e.k <= 1) collect_passthrough(e.args[0], rv, out);
            break;
        case ExprKind::set_exact:
            if (e.k == 1) collect_passthrough(e.args[0], rv, out);
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<std::string> validate(const RuleSystem& system) {
    std::vector<std::string> out;
    if (system.entry.empty()) out.push_back("entry combination is empty");
    for (const auto& t : system.entry) {
        if (t.sign != 1 && t.sign != -1)
            out.push_back("entry sign for rule '" + t.rule + "' must be +1 or -1");
        if (!system.rules.count(t.rule))
            out.push_back("entry references unknown rule '" + t.rule + "'");
    }
    for (const auto& [name, expr] : system.rules) {
        walk(expr, [&out, &system, &name = name](const GrammarExpr& e) {
            if (e.kind == ExprKind::ref && !system.rules.count(e.name))
                out.push_back("rule '" + name + "': reference to unknown rule '" + e.name + "'");
            if ((e.kind == ExprKind::union_ || e.kind == ExprKind::product) && e.args.empty())
                out.push_back("rule '" + name + "': union/product needs at least one argument");
            if (is_setseq(e.kind)) {
                if (e.k < 0)
                    out.push_back("rule '" + name + "': negative bound " + std::to_string(e.k));
                if (e.args.size() != 1)
                    out.push_back("rule '" + name + "': set/seq takes exactly one argument");
            }
        });
    }
    if (!out.empty()) return out;

    std::map<std::string, long long> rv;
    for (const auto& [name, expr] : system.rules) {
        (void)expr;
        rv[name] = kValInf;
    }
    for (size_t pass = 0; pass < 2 * system.rules.size() + 6; ++pass) {
        bool changed = false;
        for (const auto& [name, expr] : system.rules) {
            long long v = expr_valuation(expr, rv);
            if (v != rv[name]) {
                rv[name] = v;
                changed = true;
            }
        }
        if (!changed) break;
    }
    for (const auto& [name, expr] : system.rules) {
        if (rv[name] == 0)
            out.push_back("rule '" + name + "' has valuation 0 (admits an empty structure)");
        walk(expr, [&out, &rv, &name = name](const GrammarExpr& e) {
            if (is_setseq(e.kind) && expr_valuation(e.args[0], rv) == 0)
                out.push_back("rule '" + name +
                              "': set/seq argument has a nonzero constant term");
        });
    }

    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [name, expr] : system.rules) collect_passthrough(expr, rv, adj[name]);
    std::map<std::string, int> color;
    std::vector<std::string> stack;
    std::function<bool(const std::string&)> dfs = [&](const std::string& u) -> bool {
        color[u] = 1;
        stack.push_back(u);
        for (const auto& v : adj[u]) {
            if (color[v] == 1) {
                std::string msg = "same-degree dependency cycle: ";
                auto it = std::find(stack.begin(), stack.end(), v);
                for (; it != stack.end(); ++it) msg += *it + " -> ";
                msg += v;
                out.push_back(msg);
                return true;
            }
            if (color[v] == 0 && dfs(v)) return true;
        }
        stack.pop_back();
        color[u] = 2;
        return false;
    };
    for (const auto& [name, expr] : system.rules) {
        (void)expr;
        if (color[name] == 0 && dfs(name)) break;
    }
    return out;
}

// ---------------------------------------------------------------------------
// sweep engine: recompute every rule from the previous snapshot, starting
// from the zero series, until a whole sweep changes nothing

namespace {

Series eval_unlabeled(const GrammarExpr& e, const std::map<std::string, Series>& vals, int N) {
    switch (e.kind) {
        case ExprKind::atom:
        case ExprKind::rooted_atom:
            return Series::atom(N);
        case ExprKind::ref:
            return vals.at(e.name);
        case ExprKind::union_: {
            Series r(N);
            for (const auto& a : e.args) r = r + eval_unlabeled(a, vals, N);
            return r;
        }
        case ExprKind::product: {
            Series r = eval_unlabeled(e.args[0], vals, N);
            for (size_t i = 1; i < e.args.size(); ++i) r = r * eval_unlabeled(e.args[i], vals, N);
            return r;
        }
        case ExprKind::set_atleast:
            return mset_atleast(eval_unlabeled(e.args[0], vals, N), e.k);
        case ExprKind::set_exact:
            return mset_exact(eval_unlabeled(e.args[0], vals, N), e.k);
        case ExprKind::seq_atleast:
            return seq_atleast(eval_unlabeled(e.args[0], vals, N), e.k);
    }
    throw internal_error("unhandled expression kind");
}

RationalSeries eval_labeled(const GrammarExpr& e, const std::map<std::string, RationalSeries>& vals,
                            int N) {
    switch (e.kind) {
        case ExprKind::atom:
        case ExprKind::rooted_atom:
            return RationalSeries(Series::atom(N));
        case ExprKind::ref:
            return vals.at(e.name);
        case ExprKind::union_: {
            RationalSeries r(N);
            for (const auto& a : e.args) r = r + eval_labeled(a, vals, N);
            return r;
        }
        case ExprKind::product: {
            RationalSeries r = eval_labeled(e.args[0], vals, N);
            for (size_t i = 1; i < e.args.size(); ++i) r = r * eval_labeled(e.args[i], vals, N);
            return r;
        }
        case ExprKind::set_atleast:
            return labeled_set_atleast(eval_labeled(e.args[0], vals, N), e.k);
        case ExprKind::set_exact:
            return labeled_set_exact(eval_labeled(e.args[0], vals, N), e.k);
        case ExprKind::seq_atleast:
            return labeled_seq_atleast(eval_labeled(e.args[0], vals, N), e.k);
    }
    throw internal_error("unhandled expression kind");
}

template <class S, class EvalOne>
std::map<std::string, S> run_sweeps(const RuleSystem& sys, int N, EvalOne eval_one,
                                    EvalStats* stats) {
    std::map<std::string, S> cur;
    for (const auto& [name, expr] : sys.rules) {
        (void)expr;
        cur.emplace(name, S(N));
    }
    bool monotone = true;
    for (int sweep = 1; sweep <= N + 2; ++sweep) {
        std::map<std::string, S> next;
        for (const auto& [name, expr] : sys.rules) next.emplace(name, eval_one(expr, cur));
        for (const auto& [name, s] : next) {
            const S& prev = cur.at(name);
            for (int n = 0; n <= N; ++n)
                if (s[n] < prev[n]) monotone = false;
        }
        bool stable = (next == cur);
        cur = std::move(next);
        if (stable) {
            if (stats) {
                stats->strategy = "sweep";
                stats->sweeps = sweep;
                stats->monotone = monotone;
            }
            return cur;
        }
    }
    throw evaluation_error(
        "no fixed point within the sweep bound; the system is not well-founded at this "
        "truncation degree");
}

// ---------------------------------------------------------------------------
// frontier engine: one pass over degrees, each rule advanced by incremental
// recurrences; inside a degree a short inner loop settles dependencies that
// stay at the same degree (refs, one-element set/seq layers)

struct FNode {
    enum class Op { atom, one, ref, lincomb, prod, mset, tower, seq };
    Op op = Op::atom;
    int a = -1, b = -1;  // prod children; child of mset/tower/seq; resolved ref target in a
    std::vector<int> kids;
    std::vector<int> signs;
    int k = 0;           // tower height
    bool below = false;  // tower exposes sum of layers < k instead of layer k
    std::string ref_name;
    std::vector<bigint> co;
    std::vector<std::vector<bigint>> layers;  // tower only, layers[j][n]
    std::vector<bigint> euler_c;              // mset only, c_k for settled degrees
};

class Frontier {
public:
    Frontier(const RuleSystem& sys, Semantics sem, int N) : sys_(sys), sem_(sem), N_(N) {}

    std::map<std::string, Series> run() {
        for (const auto& [name, expr] : sys_.rules) rule_root_[name] = compile(expr);
        for (auto& nd : nodes_)
            if (nd.op == FNode::Op::ref) nd.a = rule_root_.at(nd.ref_name);
        for (auto& nd : nodes_) {
            nd.co.assign(N_ + 1, 0);
            if (nd.op == FNode::Op::tower)
                nd.layers.assign(nd.k + 1, std::vector<bigint>(N_ + 1, 0));
        }
        if (sem_ == Semantics::labeled) {
            binom_.resize(N_ + 1);
            for (int n = 0; n <= N_; ++n) {
                binom_[n].resize(n + 1);
                binom_[n][0] = 1;
                binom_[n][n] = 1;
                for (int i = 1; i < n; ++i) binom_[n][i] = binom_[n - 1][i - 1] + binom_[n - 1][i];
            }
        }
        int limit = static_cast<int>(nodes_.size()) + 2;
        for (int n = 0; n <= N_; ++n) {
            for (int round = 0;; ++round) {
                if (round > limit)
                    throw evaluation_error(
                        "degree " + std::to_string(n) +
                        " did not settle; the system is not well-founded");
                bool changed = false;
                for (auto& nd : nodes_) {
                    bigint v = recompute(nd, n);
                    if (v != nd.co[n]) {
                        nd.co[n] = std::move(v);
                        changed = true;
                    }
                }
                if (!changed) break;
            }
        }
        std::map<std::string, Series> out;
        for (const auto& [name, root] : rule_root_) {
            Series s(N_);
            for (int n = 0; n <= N_; ++n) s.at(n) = nodes_[root].co[n];
            out.emplace(name, std::move(s));
        }
        return out;
    }

private:
    const RuleSystem& sys_;
    Semantics sem_;
    int N_;
    std::vector<FNode> nodes_;
    std::map<std::string, int> rule_root_;
    std::vector<std::vector<bigint>> binom_;

    int push(FNode nd) {
        nodes_.push_back(std::move(nd));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int push_prod(int a, int b) {
        FNode nd;
        nd.op = FNode::Op::prod;
        nd.a = a;
        nd.b = b;
        return push(std::move(nd));
    }

    int compile(const GrammarExpr& e) {
        switch (e.kind) {
            case ExprKind::atom:
            case ExprKind::rooted_atom: {
                FNode nd;
                nd.op = FNode::Op::atom;
                return push(std::move(nd));
            }
            case ExprKind::ref: {
                FNode nd;
                nd.op = FNode::Op::ref;
                nd.ref_name = e.name;
                return push(std::move(nd));
            }
            case ExprKind::union_: {
                std::vector<int> kids;
                for (const auto& a : e.args) kids.push_back(compile(a));
                FNode nd;
                nd.op = FNode::Op::lincomb;
                nd.kids = std::move(kids);
                nd.signs.assign(e.args.size(), 1);
                return push(std::move(nd));
            }
            case ExprKind::product: {
                int cur = compile(e.args[0]);
                for (size_t i = 1; i < e.args.size(); ++i) cur = push_prod(cur, compile(e.args[i]));
                return cur;
            }
            case ExprKind::set_atleast: {
                int c = compile(e.args[0]);
                FNode m;
                m.op = FNode::Op::mset;
                m.a = c;
                int mid = push(std::move(m));
                if (e.k == 0) return mid;
                FNode t;
                t.op = FNode::Op::tower;
                t.a = c;
                t.k = e.k;
                t.below = true;
                int tid = push(std::move(t));
                FNode l;
                l.op = FNode::Op::lincomb;
                l.kids = {mid, tid};
                l.signs = {1, -1};
                return push(std::move(l));
            }
            case ExprKind::set_exact: {
                if (e.k == 0) {
                    FNode nd;
                    nd.op = FNode::Op::one;
                    return push(std::move(nd));
                }
                int c = compile(e.args[0]);
                FNode t;
                t.op = FNode::Op::tower;
                t.a = c;
                t.k = e.k;
                t.below = false;
                return push(std::move(t));
            }
            case ExprKind::seq_atleast: {
                int c = compile(e.args[0]);
                FNode s;
                s.op = FNode::Op::seq;
                s.a = c;
                int sid = push(std::move(s));
                if (e.k == 0) return sid;
                int p = c;
                for (int i = 1; i < e.k; ++i) p = push_prod(p, c);
                return push_prod(p, sid);
            }
        }
        throw internal_error("unhandled expression kind");
    }

    static void addmul(bigint& acc, const bigint& x, const bigint& y) {
        mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }

    static bigint div_exact(const bigint& s, unsigned long d, const char* what) {
        bigint q, r;
        mpz_tdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t(), d);
        if (r != 0) throw internal_error(std::string(what) + ": non-exact division");
        return q;
    }

    bigint recompute(FNode& nd, int n) {
        switch (nd.op) {
            case FNode::Op::atom:
                return n == 1 ? 1 : 0;
            case FNode::Op::one:
                return n == 0 ? 1 : 0;
            case FNode::Op::ref:
                return nodes_[nd.a].co[n];
            case FNode::Op::lincomb: {
                bigint v = 0;
                for (size_t i = 0; i < nd.kids.size(); ++i) {
                    if (nd.signs[i] > 0)
                        v += nodes_[nd.kids[i]].co[n];
                    else
                        v -= nodes_[nd.kids[i]].co[n];
                }
                return v;
            }
            case FNode::Op::prod: {
                const auto& A = nodes_[nd.a].co;
                const auto& B = nodes_[nd.b].co;
                bigint v = 0;
                if (sem_ == Semantics::unlabeled) {
                    for (int i = 0; i <= n; ++i) addmul(v, A[i], B[n - i]);
                } else {
                    for (int i = 0; i <= n; ++i) {
                        bigint t = binom_[n][i] * A[i];
                        addmul(v, t, B[n - i]);
                    }
                }
                return v;
            }
            case FNode::Op::mset:
                return sem_ == Semantics::unlabeled ? recompute_mset(nd, n)
                                                    : recompute_exp(nd, n);
            case FNode::Op::tower:
                return recompute_tower(nd, n);
            case FNode::Op::seq: {
                if (n == 0) return 1;
                const auto& A = nodes_[nd.a].co;
                bigint v = 0;
                if (sem_ == Semantics::unlabeled) {
                    for (int j = 1; j <= n; ++j) addmul(v, A[j], nd.co[n - j]);
                } else {
                    for (int j = 1; j <= n; ++j) {
                        bigint t = binom_[n][j] * A[j];
                        addmul(v, t, nd.co[n - j]);
                    }
                }
                return v;
            }
        }
        throw internal_error("unhandled node kind");
    }

    // Euler transform step. c_k for settled degrees k < n is cached; c_n is
    // rebuilt every inner round because it reads the argument at degree n.
    bigint recompute_mset(FNode& nd, int n) {
        if (n == 0) return 1;
        const auto& A = nodes_[nd.a].co;
        while (static_cast<int>(nd.euler_c.size()) < n) {
            int k = static_cast<int>(nd.euler_c.size());
            bigint c = 0;
            if (k > 0)
                for (int d = 1; d <= k; ++d)
                    if (k % d == 0) c += d * A[d];
            nd.euler_c.push_back(std::move(c));
        }
        bigint cn = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) cn += d * A[d];
        bigint s = cn * nd.co[0];
        for (int k = 1; k < n; ++k) addmul(s, nd.euler_c[k], nd.co[n - k]);
        return div_exact(s, static_cast<unsigned long>(n), "multiset recurrence");
    }

    // labeled set of any size: e_n = sum_t C(n-1,t-1) a_t e_{n-t}
    bigint recompute_exp(FNode& nd, int n) {
        if (n == 0) return 1;
        const auto& A = nodes_[nd.a].co;
        bigint v = 0;
        for (int t = 1; t <= n; ++t) {
            bigint w = binom_[n - 1][t - 1] * A[t];
            addmul(v, w, nd.co[n - t]);
        }
        return v;
    }

    // layers[j] counts multisets (or labeled sets) of exactly j elements
    bigint recompute_tower(FNode& nd, int n) {
        const auto& A = nodes_[nd.a].co;
        nd.layers[0][n] = (n == 0) ? 1 : 0;
        for (int j = 1; j <= nd.k; ++j) {
            bigint s = 0;
            if (sem_ == Semantics::unlabeled) {
                // h_j = (1/j) sum_{i=1..j} a(z^i) h_{j-i}
                for (int i = 1; i <= j; ++i)
                    for (int t = 1; i * t <= n; ++t)
                        addmul(s, A[t], nd.layers[j - i][n - i * t]);
            } else {
                // S_j = (1/j) A * S_{j-1}, binomial convolution
                for (int t = 1; t <= n; ++t) {
                    bigint w = binom_[n][t] * A[t];
                    addmul(s, w, nd.layers[j - 1][n - t]);
                }
            }
            nd.layers[j][n] = div_exact(s, static_cast<unsigned long>(j), "set layer");
        }
        if (!nd.below) return nd.layers[nd.k][n];
        bigint v = 0;
        for (int j = 0; j < nd.k; ++j) v += nd.layers[j][n];
        return v;
    }
};

}  // namespace

std::map<std::string, Series> evaluate(const RuleSystem& system, Semantics semantics, int N,
                                       EvalStrategy strategy, EvalStats* stats) {
    auto problems = validate(system);
    if (!problems.empty()) {
        std::string msg = "invalid rule system:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw std::invalid_argument(msg);
    }
    if (N < 0) throw std::invalid_argument("truncation degree must be >= 0");

    EvalStrategy chosen = strategy;
    if (chosen == EvalStrategy::automatic)
        chosen = N <= 64 ? EvalStrategy::sweep : EvalStrategy::frontier;

    std::map<std::string, Series> out;
    if (chosen == EvalStrategy::sweep) {
        if (semantics == Semantics::unlabeled) {
            out = run_sweeps<Series>(
                system, N,
                [N](const GrammarExpr& e, const std::map<std::string, Series>& vals) {
                    return eval_unlabeled(e, vals, N);
                },
                stats);
        } else {
            auto egf = run_sweeps<RationalSeries>(
                system, N,
                [N](const GrammarExpr& e, const std::map<std::string, RationalSeries>& vals) {
                    return eval_labeled(e, vals, N);
                },
                stats);
            for (auto& [name, rs] : egf) {
                RationalSeries scaled(N);
                bigint fact = 1;
                for (int n = 0; n <= N; ++n) {
                    if (n > 0) fact *= n;
                    scaled.at(n) = rs[n] * bigrat(fact);
                }
                out.emplace(name, scaled.to_integer_series());
            }
        }
    } else {
        Frontier engine(system, semantics, N);
        out = engine.run();
        if (stats) {
            stats->strategy = "frontier";
            stats->sweeps = 0;
            stats->monotone = true;
        }
    }

    for (const auto& [name, s] : out)
        for (int n = 0; n <= N; ++n)
            if (s[n] < 0)
                throw internal_error("negative coefficient in rule '" + name + "' at degree " +
                                     std::to_string(n));
    return out;
}

Series combine_entry(const RuleSystem& system, const std::map<std::string, Series>& values) {
    if (system.entry.empty()) throw std::invalid_argument("entry combination is empty");
    auto first = values.find(system.entry.front().rule);
    if (first == values.end())
        throw std::invalid_argument("entry rule '" + system.entry.front().rule +
                                    "' has no evaluated series");
    int N = first->second.trunc_degree();
    Series r(N);
    for (const auto& t : system.entry) {
        auto it = values.find(t.rule);
        if (it == values.end())
            throw std::invalid_argument("entry rule '" + t.rule + "' has no evaluated series");
        r = t.sign > 0 ? r + it->second : r - it->second;
    }
    for (int n = 0; n <= N; ++n)
        if (r[n] < 0)
            throw evaluation_error("entry combination is negative at degree " + std::to_string(n));
    return r;
}

Series evaluate_entry(const RuleSystem& system, Semantics semantics, int N,
                      EvalStrategy strategy) {
    return combine_entry(system, evaluate(system, semantics, N, strategy));
}

// ---------------------------------------------------------------------------
// JSON form

namespace {

nlohmann::json expr_to_json(const GrammarExpr& e) {
    using nlohmann::json;
    switch (e.kind) {
        case ExprKind::atom:
            return json{{"op", "atom"}};
        case ExprKind::rooted_atom:
            return json{{"op", "rooted_atom"}};
        case ExprKind::ref:
            return json{{"op", "ref"}, {"name", e.name}};
        case ExprKind::union_:
        case ExprKind::product: {
            json args = json::array();
            for (const auto& a : e.args) args.push_back(expr_to_json(a));
            return json{{"op", e.kind == ExprKind::union_ ? "union" : "product"},
                        {"args", std::move(args)}};
        }
        case ExprKind::set_atleast:
        case ExprKind::set_exact:
        case ExprKind::seq_atleast: {
            const char* op = e.kind == ExprKind::set_atleast  ? "set_atleast"
                             : e.kind == ExprKind::set_exact ? "set_exact"
                                                             : "seq_atleast";
            return json{{"op", op}, {"k", e.k}, {"arg", expr_to_json(e.args[0])}};
        }
    }
    throw internal_error("unhandled expression kind");
}

GrammarExpr expr_from_json(const nlohmann::json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "atom") return GrammarExpr::atom();
    if (op == "rooted_atom") return GrammarExpr::rooted_atom();
    if (op == "ref") return GrammarExpr::ref(j.at("name").get<std::string>());
    if (op == "union" || op == "product") {
        std::vector<GrammarExpr> args;
        for (const auto& a : j.at("args")) args.push_back(expr_from_json(a));
        return op == "union" ? GrammarExpr::add(std::move(args))
                             : GrammarExpr::mul(std::move(args));
    }
    if (op == "set_atleast" || op == "set_exact" || op == "seq_atleast") {
        GrammarExpr arg = expr_from_json(j.at("arg"));
        int k = j.at("k").get<int>();
        if (op == "set_atleast") return GrammarExpr::set_atleast(std::move(arg), k);
        if (op == "set_exact") return GrammarExpr::set_exact(std::move(arg), k);
        return GrammarExpr::seq_atleast(std::move(arg), k);
    }
    throw std::invalid_argument("unknown grammar op '" + op + "'");
}

}  // namespace

nlohmann::json system_to_json(const RuleSystem& system) {
    using nlohmann::json;
    json rules = json::object();
    for (const auto& [name, expr] : system.rules) rules[name] = expr_to_json(expr);
    json entry = json::array();
    for (const auto& t : system.entry) entry.push_back(json{{"sign", t.sign}, {"rule", t.rule}});
    return json{{"rules", std::move(rules)}, {"entry", std::move(entry)}};
}

RuleSystem system_from_json(const nlohmann::json& j) {
    RuleSystem sys;
    for (const auto& [name, e] : j.at("rules").items()) sys.rules.emplace(name, expr_from_json(e));
    for (const auto& t : j.at("entry"))
        sys.entry.push_back(EntryTerm{t.at("sign").get<int>(), t.at("rule").get<std::string>()});
    return sys;
}

}  // namespace splitenum
