#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splitenum/grammar.hpp"

#include <json.hpp>

#include <string>
#include <vector>

using namespace splitenum;
using GE = GrammarExpr;

namespace {

Series series_of(const std::vector<long>& prefix, int N) {
    Series s(N);
    for (int n = 0; n <= N && n < static_cast<int>(prefix.size()); ++n) s.at(n) = prefix[n];
    return s;
}

bool has_diag(const std::vector<std::string>& diags, const std::string& needle) {
    for (const auto& d : diags)
        if (d.find(needle) != std::string::npos) return true;
    return false;
}

// binary trees counted by leaves: B = z + B*B, coefficients are the
// Catalan numbers shifted by one
RuleSystem catalan_system() {
    RuleSystem sys;
    sys.rules["B"] = GE::add({GE::atom(), GE::mul({GE::ref("B"), GE::ref("B")})});
    sys.entry = {{1, "B"}};
    return sys;
}

// rooted trees: T = z * MSET(T)
RuleSystem rooted_tree_system(bool use_rooted_atom = false) {
    RuleSystem sys;
    GE z = use_rooted_atom ? GE::rooted_atom() : GE::atom();
    sys.rules["T"] = GE::mul({z, GE::set_atleast(GE::ref("T"), 0)});
    sys.entry = {{1, "T"}};
    return sys;
}

// exercises every construction with nontrivial bounds
RuleSystem mixed_system() {
    RuleSystem sys;
    sys.rules["P"] = GE::mul({GE::atom(), GE::set_atleast(GE::ref("P"), 0)});
    sys.rules["Q"] = GE::mul({GE::atom(), GE::set_exact(GE::ref("P"), 2)});
    sys.rules["R"] = GE::mul({GE::atom(), GE::set_atleast(GE::ref("P"), 3)});
    sys.rules["S"] = GE::mul({GE::atom(), GE::seq_atleast(GE::ref("P"), 2)});
    sys.rules["V"] = GE::mul({GE::atom(), GE::set_exact(GE::ref("P"), 3)});
    sys.rules["W"] = GE::add({GE::ref("Q"), GE::mul({GE::atom(), GE::ref("R")}), GE::ref("S")});
    sys.entry = {{1, "W"}, {1, "V"}};
    return sys;
}

}  // namespace

TEST_CASE("validate accepts well-formed systems") {
    CHECK(validate(catalan_system()).empty());
    CHECK(validate(rooted_tree_system()).empty());
    CHECK(validate(mixed_system()).empty());
}

TEST_CASE("validate reports structural problems") {
    RuleSystem sys;
    sys.rules["A"] = GE::ref("Missing");
    sys.entry = {{1, "A"}, {1, "AlsoMissing"}};
    auto diags = validate(sys);
    CHECK(has_diag(diags, "unknown rule 'Missing'"));
    CHECK(has_diag(diags, "unknown rule 'AlsoMissing'"));

    RuleSystem empty_entry;
    empty_entry.rules["A"] = GE::atom();
    CHECK(has_diag(validate(empty_entry), "entry combination is empty"));

    RuleSystem bad_sign;
    bad_sign.rules["A"] = GE::atom();
    bad_sign.entry = {{2, "A"}};
    CHECK(has_diag(validate(bad_sign), "must be +1 or -1"));

    RuleSystem neg_bound;
    neg_bound.rules["A"] = GE::set_atleast(GE::atom(), -1);
    neg_bound.entry = {{1, "A"}};
    CHECK(has_diag(validate(neg_bound), "negative bound"));
}

TEST_CASE("validate flags empty-structure hazards") {
    // Set argument has a constant term: inner Set>=0 admits the empty set
    RuleSystem sys;
    sys.rules["A"] = GE::mul({GE::atom(), GE::set_atleast(GE::set_atleast(GE::ref("A"), 0), 1)});
    sys.entry = {{1, "A"}};
    CHECK(has_diag(validate(sys), "nonzero constant term"));

    // whole rule has valuation 0
    RuleSystem v0;
    v0.rules["A"] = GE::set_atleast(GE::atom(), 0);
    v0.entry = {{1, "A"}};
    CHECK(has_diag(validate(v0), "valuation 0"));
}

TEST_CASE("validate finds same-degree cycles") {
    RuleSystem self;
    self.rules["A"] = GE::ref("A");
    self.entry = {{1, "A"}};
    CHECK(has_diag(validate(self), "same-degree dependency cycle"));

    RuleSystem via_set;
    via_set.rules["A"] = GE::set_atleast(GE::ref("A"), 1);
    via_set.entry = {{1, "A"}};
    CHECK(has_diag(validate(via_set), "same-degree dependency cycle"));

    // two-rule cycle through a product whose other factor has valuation 0
    RuleSystem prod;
    prod.rules["A"] = GE::mul({GE::set_exact(GE::ref("B"), 0), GE::ref("B")});
    prod.rules["B"] = GE::ref("A");
    prod.entry = {{1, "A"}};
    CHECK(has_diag(validate(prod), "same-degree dependency cycle"));

    // the same shape is fine when the bound forces growth
    RuleSystem ok;
    ok.rules["A"] = GE::mul({GE::atom(), GE::set_atleast(GE::ref("A"), 1)});
    ok.entry = {{1, "A"}};
    CHECK(validate(ok).empty());
}

TEST_CASE("evaluate rejects invalid systems") {
    RuleSystem self;
    self.rules["A"] = GE::ref("A");
    self.entry = {{1, "A"}};
    CHECK_THROWS_AS(evaluate(self, Semantics::unlabeled, 5), std::invalid_argument);
}

TEST_CASE("binary trees by leaves give Catalan numbers") {
    const int N = 10;
    auto vals = evaluate(catalan_system(), Semantics::unlabeled, N, EvalStrategy::sweep);
    CHECK(vals.at("B") == series_of({0, 1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862}, N));
}

TEST_CASE("unlabeled rooted trees") {
    const int N = 10;
    for (bool rooted_atom : {false, true}) {
        auto vals = evaluate(rooted_tree_system(rooted_atom), Semantics::unlabeled, N,
                             EvalStrategy::sweep);
        CHECK(vals.at("T") == series_of({0, 1, 1, 2, 4, 9, 20, 48, 115, 286, 719}, N));
    }
}

TEST_CASE("labeled rooted trees give n^(n-1)") {
    const int N = 7;
    auto vals = evaluate(rooted_tree_system(), Semantics::labeled, N, EvalStrategy::sweep);
    CHECK(vals.at("T") == series_of({0, 1, 2, 9, 64, 625, 7776, 117649}, N));
}

TEST_CASE("planted plane trees via sequences give Catalan numbers") {
    RuleSystem sys;
    sys.rules["G"] = GE::mul({GE::atom(), GE::seq_atleast(GE::ref("G"), 0)});
    sys.entry = {{1, "G"}};
    const int N = 8;
    auto vals = evaluate(sys, Semantics::unlabeled, N, EvalStrategy::sweep);
    CHECK(vals.at("G") == series_of({0, 1, 1, 2, 5, 14, 42, 132, 429}, N));
}

TEST_CASE("set of exactly zero elements is the constant one") {
    RuleSystem sys;
    sys.rules["F"] = GE::mul({GE::atom(), GE::set_exact(GE::ref("F"), 0)});
    sys.entry = {{1, "F"}};
    for (auto strat : {EvalStrategy::sweep, EvalStrategy::frontier}) {
        auto vals = evaluate(sys, Semantics::unlabeled, 5, strat);
        CHECK(vals.at("F") == series_of({0, 1}, 5));
    }
}

TEST_CASE("both engines agree on every rule") {
    const int N = 25;
    for (auto sem : {Semantics::unlabeled, Semantics::labeled}) {
        for (const auto& sys : {catalan_system(), rooted_tree_system(), mixed_system()}) {
            auto a = evaluate(sys, sem, N, EvalStrategy::sweep);
            auto b = evaluate(sys, sem, N, EvalStrategy::frontier);
            CHECK(a == b);
        }
    }
}

TEST_CASE("automatic strategy is consistent across the engine switchover") {
    // N=60 runs the sweep engine, N=70 the frontier engine
    auto small = evaluate(rooted_tree_system(), Semantics::unlabeled, 60);
    auto large = evaluate(rooted_tree_system(), Semantics::unlabeled, 70);
    for (int n = 0; n <= 60; ++n) CHECK(small.at("T")[n] == large.at("T")[n]);
}

TEST_CASE("truncation consistency") {
    for (auto sem : {Semantics::unlabeled, Semantics::labeled}) {
        auto lo = evaluate(mixed_system(), sem, 12, EvalStrategy::sweep);
        auto hi = evaluate(mixed_system(), sem, 20, EvalStrategy::sweep);
        for (const auto& [name, s] : lo)
            for (int n = 0; n <= 12; ++n) CHECK(s[n] == hi.at(name)[n]);
    }
}

TEST_CASE("sweep stats: monotone and within the sweep bound") {
    EvalStats stats;
    const int N = 30;
    evaluate(catalan_system(), Semantics::unlabeled, N, EvalStrategy::sweep, &stats);
    CHECK(stats.strategy == "sweep");
    CHECK(stats.monotone);
    CHECK(stats.sweeps <= N + 2);

    evaluate(mixed_system(), Semantics::labeled, N, EvalStrategy::sweep, &stats);
    CHECK(stats.monotone);
    CHECK(stats.sweeps <= N + 2);
}

TEST_CASE("labeled counts stay below n! times unlabeled counts") {
    const int N = 7;
    auto u = evaluate(rooted_tree_system(), Semantics::unlabeled, N);
    auto l = evaluate(rooted_tree_system(), Semantics::labeled, N);
    bigint fact = 1;
    for (int n = 1; n <= N; ++n) {
        fact *= n;
        CHECK(l.at("T")[n] <= fact * u.at("T")[n]);
    }
}

TEST_CASE("deep pass-through chains exceed the sweep bound but run on the frontier") {
    // A copies B at the same degree, so the sweep engine needs about two
    // sweeps per degree and hits its bound; the frontier engine settles each
    // degree with a short inner loop.
    RuleSystem sys;
    sys.rules["A"] = GE::ref("B");
    sys.rules["B"] = GE::add({GE::atom(), GE::mul({GE::atom(), GE::ref("A")})});
    sys.entry = {{1, "B"}};
    CHECK(validate(sys).empty());
    CHECK_THROWS_AS(evaluate(sys, Semantics::unlabeled, 10, EvalStrategy::sweep),
                    evaluation_error);
    auto vals = evaluate(sys, Semantics::unlabeled, 10, EvalStrategy::frontier);
    CHECK(vals.at("B") == series_of({0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 10));
    CHECK(vals.at("A") == vals.at("B"));
}

TEST_CASE("entry combination") {
    RuleSystem sys;
    sys.rules["A"] = GE::add({GE::atom(), GE::mul({GE::atom(), GE::atom()})});  // z + z^2
    sys.rules["B"] = GE::mul({GE::atom(), GE::atom()});                         // z^2
    sys.entry = {{1, "A"}, {-1, "B"}};
    auto vals = evaluate(sys, Semantics::unlabeled, 4);
    CHECK(combine_entry(sys, vals) == series_of({0, 1}, 4));
    CHECK(evaluate_entry(sys, Semantics::unlabeled, 4) == series_of({0, 1}, 4));

    RuleSystem neg;
    neg.rules = sys.rules;
    neg.entry = {{1, "B"}, {-1, "A"}};
    auto nvals = evaluate(neg, Semantics::unlabeled, 4);
    CHECK_THROWS_AS(combine_entry(neg, nvals), evaluation_error);

    std::map<std::string, Series> missing;
    CHECK_THROWS_AS(combine_entry(sys, missing), std::invalid_argument);
}

TEST_CASE("signed entries combine across rules") {
    // two copies of the tree series plus atom, minus one copy: equals T + z
    RuleSystem sys;
    sys.rules["T"] = GE::mul({GE::atom(), GE::set_atleast(GE::ref("T"), 0)});
    sys.rules["U"] = GE::add({GE::ref("T"), GE::atom()});
    sys.entry = {{1, "T"}, {1, "U"}, {-1, "T"}};
    auto entry = evaluate_entry(sys, Semantics::unlabeled, 8);
    CHECK(entry == series_of({0, 2, 1, 2, 4, 9, 20, 48, 115}, 8));
}

TEST_CASE("json round trip") {
    for (const auto& sys : {catalan_system(), rooted_tree_system(true), mixed_system()}) {
        auto j = system_to_json(sys);
        RuleSystem back = system_from_json(j);
        CHECK(back == sys);
        // and through a serialized string
        RuleSystem again = system_from_json(nlohmann::json::parse(j.dump()));
        CHECK(again == sys);
    }
}

TEST_CASE("json rejects unknown ops") {
    auto j = nlohmann::json::parse(R"({"rules":{"A":{"op":"spiral"}},"entry":[{"sign":1,"rule":"A"}]})");
    CHECK_THROWS_AS(system_from_json(j), std::invalid_argument);
}

TEST_CASE("evaluation at degree zero") {
    auto vals = evaluate(rooted_tree_system(), Semantics::unlabeled, 0);
    CHECK(vals.at("T") == Series(0));
}
