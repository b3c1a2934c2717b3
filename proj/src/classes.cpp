#include <splitenum/classes.hpp>

#include <stdexcept>

namespace splitenum {

namespace {

using GE = GrammarExpr;

GE Z() { return GE::atom(); }
GE ZR() { return GE::rooted_atom(); }
GE R(const char* rule) { return GE::ref(rule); }

// Rule naming used across all five classes:
//   clique          a clique node entered through any slot
//   clique_guarded  a clique entered from the direction of a star center;
//                   its subtrees must not open a path to another center
//   star_center     a star entered through its center
//   star_extremity  a star entered through an extremity
//   quad_center     one half of a center-to-center pair of degree-3 stars
//                   (a square), entered through its center
//   quad_extremity  the same star entered through an extremity
//   at_*            trees rerooted at a node or edge for the signed
//                   inclusion-exclusion entry of the unrooted systems

RuleSystem block_rooted() {
    RuleSystem s;
    s.rules["root"] = GE::mul({ZR(), GE::add({R("star_center"), R("star_extremity"), R("clique")})});
    s.rules["clique"] = GE::set_atleast(GE::add({Z(), R("star_extremity")}), 2);
    s.rules["star_center"] = GE::set_atleast(GE::add({Z(), R("clique"), R("star_extremity")}), 2);
    s.rules["star_extremity"] =
        GE::mul({Z(), GE::set_atleast(GE::add({Z(), R("clique"), R("star_extremity")}), 1)});
    s.entry = {{1, "root"}};
    return s;
}

RuleSystem block_unrooted() {
    RuleSystem s = block_rooted();
    s.rules.erase("root");
    s.rules["at_clique"] = GE::set_atleast(GE::add({Z(), R("star_extremity")}), 3);
    s.rules["at_star"] = GE::mul({Z(), R("star_center")});
    s.rules["at_star_star_edge"] = GE::set_exact(R("star_extremity"), 2);
    s.rules["at_star_star_arc"] = GE::mul({R("star_extremity"), R("star_extremity")});
    s.rules["at_star_clique_edge"] = GE::mul({R("clique"), R("star_extremity")});
    s.entry = {{1, "at_clique"},
               {1, "at_star"},
               {1, "at_star_star_edge"},
               {-1, "at_star_star_arc"},
               {-1, "at_star_clique_edge"}};
    return s;
}

RuleSystem ptolemaic_rooted() {
    RuleSystem s;
    s.rules["root"] = GE::mul({ZR(), GE::add({R("star_center"), R("star_extremity"), R("clique")})});
    s.rules["star_center"] =
        GE::set_atleast(GE::add({Z(), R("clique"), R("star_extremity")}), 2);
    s.rules["star_extremity"] =
        GE::mul({GE::add({Z(), R("clique_guarded")}),
                 GE::set_atleast(GE::add({Z(), R("clique"), R("star_extremity")}), 1)});
    // an unguarded clique may hang at most one star-center below itself
    s.rules["clique"] =
        GE::add({GE::mul({R("star_center"),
                          GE::set_atleast(GE::add({Z(), R("star_extremity")}), 1)}),
                 GE::set_atleast(GE::add({Z(), R("star_extremity")}), 2)});
    s.rules["clique_guarded"] = GE::set_atleast(GE::add({Z(), R("star_extremity")}), 2);
    s.entry = {{1, "root"}};
    return s;
}

RuleSystem ptolemaic_unrooted() {
    RuleSystem s = ptolemaic_rooted();
    s.rules.erase("root");
    s.rules["at_clique"] =
        GE::add({GE::mul({R("star_center"),
                          GE::set_atleast(GE::add({Z(), R("star_extremity")}), 2)}),
                 GE::set_atleast(GE::add({Z(), R("star_extremity")}), 3)});
    s.rules["at_star"] = GE::mul({R("star_center"), GE::add({Z(), R("clique_guarded")})});
    s.rules["at_star_star_edge"] = GE::set_exact(R("star_extremity"), 2);
    s.rules["at_star_star_arc"] = GE::mul({R("star_extremity"), R("star_extremity")});
    s.rules["at_star_clique_edge"] =
        GE::add({GE::mul({R("clique"), R("star_extremity")}),
                 GE::mul({R("clique_guarded"), R("star_center")})});
    s.entry = {{1, "at_clique"},
               {1, "at_star"},
               {1, "at_star_star_edge"},
               {-1, "at_star_star_arc"},
               {-1, "at_star_clique_edge"}};
    return s;
}

RuleSystem cactus23_rooted() {
    RuleSystem s = block_rooted();
    s.rules["clique"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 2);
    return s;
}

RuleSystem cactus23_unrooted() {
    RuleSystem s = block_unrooted();
    s.rules["clique"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 2);
    s.rules["at_clique"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 3);
    return s;
}

RuleSystem cactus3_rooted() {
    RuleSystem s;
    s.rules["root"] = GE::mul({ZR(), GE::add({R("star_center"), R("clique")})});
    s.rules["clique"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 2);
    s.rules["star_center"] = GE::set_atleast(R("clique"), 2);
    s.rules["star_extremity"] = GE::mul({Z(), GE::set_atleast(R("clique"), 1)});
    s.entry = {{1, "root"}};
    return s;
}

RuleSystem cactus3_unrooted() {
    RuleSystem s = cactus3_rooted();
    s.rules.erase("root");
    s.rules["at_clique"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 3);
    s.rules["at_star"] = GE::mul({Z(), R("star_center")});
    s.rules["at_star_clique_edge"] = GE::mul({R("clique"), R("star_extremity")});
    s.entry = {{1, "at_clique"}, {1, "at_star"}, {-1, "at_star_clique_edge"}};
    return s;
}

RuleSystem cactus4_rooted() {
    RuleSystem s;
    s.rules["root"] = GE::mul({ZR(), GE::add({R("quad_extremity"), R("star_center")})});
    s.rules["quad_center"] = GE::set_exact(GE::add({Z(), R("star_extremity")}), 2);
    s.rules["quad_extremity"] =
        GE::mul({R("quad_center"), GE::add({Z(), R("star_extremity")})});
    s.rules["star_center"] = GE::set_atleast(R("quad_extremity"), 2);
    s.rules["star_extremity"] = GE::mul({Z(), GE::set_atleast(R("quad_extremity"), 1)});
    s.entry = {{1, "root"}};
    return s;
}

RuleSystem cactus4_unrooted() {
    RuleSystem s = cactus4_rooted();
    s.rules.erase("root");
    s.rules["at_quad"] = GE::mul({R("quad_center"), R("quad_center")});
    s.rules["at_star"] = GE::mul({Z(), R("star_center")});
    s.rules["at_quad_quad_edge"] = GE::set_exact(R("quad_center"), 2);
    s.rules["at_quad_quad_arc"] = GE::mul({R("quad_center"), R("quad_center")});
    s.rules["at_quad_star_edge"] = GE::mul({R("quad_extremity"), R("star_extremity")});
    s.entry = {{1, "at_quad"},
               {1, "at_star"},
               {1, "at_quad_quad_edge"},
               {-1, "at_quad_quad_arc"},
               {-1, "at_quad_star_edge"}};
    return s;
}

std::map<std::pair<Variant, int>, long> one_and_edge_base_cases() {
    return {
        {{Variant::labeled_rooted, 1}, 1},    {{Variant::labeled_rooted, 2}, 2},
        {{Variant::labeled_unrooted, 1}, 1},  {{Variant::labeled_unrooted, 2}, 1},
        {{Variant::unlabeled_rooted, 1}, 1},  {{Variant::unlabeled_rooted, 2}, 1},
        {{Variant::unlabeled_unrooted, 1}, 1}, {{Variant::unlabeled_unrooted, 2}, 1},
    };
}

std::vector<ClassDefinition> build_classes() {
    std::vector<ClassDefinition> out;

    ClassDefinition block;
    block.name = "block";
    block.predicate = GraphClass::block;
    block.rooted_system = block_rooted();
    block.unrooted_system = block_unrooted();
    block.base_cases = one_and_edge_base_cases();
    block.oeis = {{Variant::labeled_rooted, "A035051"},
                  {Variant::labeled_unrooted, "A030019"},
                  {Variant::unlabeled_rooted, "A007563"},
                  {Variant::unlabeled_unrooted, "A035053"}};
    out.push_back(std::move(block));

    ClassDefinition ptolemaic;
    ptolemaic.name = "ptolemaic";
    ptolemaic.predicate = GraphClass::ptolemaic;
    ptolemaic.rooted_system = ptolemaic_rooted();
    ptolemaic.unrooted_system = ptolemaic_unrooted();
    ptolemaic.base_cases = one_and_edge_base_cases();
    out.push_back(std::move(ptolemaic));

    ClassDefinition cactus23;
    cactus23.name = "cactus23";
    cactus23.predicate = GraphClass::cactus23;
    cactus23.rooted_system = cactus23_rooted();
    cactus23.unrooted_system = cactus23_unrooted();
    cactus23.base_cases = one_and_edge_base_cases();
    cactus23.oeis = {{Variant::labeled_rooted, "A091481"},
                     {Variant::labeled_unrooted, "A091485"},
                     {Variant::unlabeled_rooted, "A091486"},
                     {Variant::unlabeled_unrooted, "A091487"}};
    out.push_back(std::move(cactus23));

    ClassDefinition cactus3;
    cactus3.name = "cactus3";
    cactus3.predicate = GraphClass::cactus3;
    cactus3.rooted_system = cactus3_rooted();
    cactus3.unrooted_system = cactus3_unrooted();
    cactus3.size_modulus = 2;  // every edge lies on a triangle: odd order only
    cactus3.size_residue = 1;
    cactus3.oeis = {{Variant::labeled_rooted, "A034940"},
                    {Variant::labeled_unrooted, "A034941"},
                    {Variant::unlabeled_rooted, "A003080"},
                    {Variant::unlabeled_unrooted, "A003081"}};
    out.push_back(std::move(cactus3));

    ClassDefinition cactus4;
    cactus4.name = "cactus4";
    cactus4.predicate = GraphClass::cactus4;
    cactus4.rooted_system = cactus4_rooted();
    cactus4.unrooted_system = cactus4_unrooted();
    cactus4.size_modulus = 3;  // k squares give 3k+1 vertices
    cactus4.size_residue = 1;
    out.push_back(std::move(cactus4));

    return out;
}

}  // namespace

std::string variant_name(Variant v) {
    switch (v) {
        case Variant::labeled_rooted: return "labeled-rooted";
        case Variant::labeled_unrooted: return "labeled-unrooted";
        case Variant::unlabeled_rooted: return "unlabeled-rooted";
        case Variant::unlabeled_unrooted: return "unlabeled-unrooted";
    }
    throw std::invalid_argument("unknown variant");
}

Variant variant_from_name(const std::string& name) {
    for (Variant v : all_variants())
        if (variant_name(v) == name) return v;
    throw std::invalid_argument("unknown variant: " + name);
}

const std::vector<Variant>& all_variants() {
    static const std::vector<Variant> v = {Variant::labeled_rooted, Variant::labeled_unrooted,
                                           Variant::unlabeled_rooted, Variant::unlabeled_unrooted};
    return v;
}

const std::vector<ClassDefinition>& all_classes() {
    static const std::vector<ClassDefinition> classes = build_classes();
    return classes;
}

const ClassDefinition& class_by_name(const std::string& name) {
    for (const ClassDefinition& c : all_classes())
        if (c.name == name) return c;
    throw std::invalid_argument("unknown class: " + name);
}

Series enumerate_class(const ClassDefinition& cls, Variant v, int N, EvalStrategy strategy) {
    if (N < 1) throw std::invalid_argument("enumeration needs at least one term");

    Series out(N);
    if (v == Variant::labeled_unrooted) {
        // unrooting forgets the distinguished vertex: divide by n
        Series rooted = enumerate_class(cls, Variant::labeled_rooted, N, strategy);
        for (int n = 1; n <= N; ++n) {
            if (rooted[n] % n != 0)
                throw internal_error("rooted labeled count not divisible by n at size " +
                                     std::to_string(n));
            out.at(n) = rooted[n] / n;
        }
        for (int n = 1; n <= std::min(N, 2); ++n) {
            auto it = cls.base_cases.find({v, n});
            bigint want = it == cls.base_cases.end() ? 0 : it->second;
            if (out[n] != want)
                throw internal_error("divided base case disagrees with the stored one at size " +
                                     std::to_string(n));
        }
    } else {
        const RuleSystem& system =
            v == Variant::unlabeled_unrooted ? cls.unrooted_system : cls.rooted_system;
        Semantics sem = v == Variant::labeled_rooted ? Semantics::labeled : Semantics::unlabeled;
        out = evaluate_entry(system, sem, N, strategy);
        for (int n = 1; n <= std::min(N, 2); ++n) {
            auto it = cls.base_cases.find({v, n});
            if (it == cls.base_cases.end()) continue;
            if (out[n] != 0)
                throw internal_error("rule system already counts something at overlay size " +
                                     std::to_string(n));
            out.at(n) = it->second;
        }
    }

    for (int n = 1; n <= N; ++n)
        if (n % cls.size_modulus != cls.size_residue && out[n] != 0)
            throw internal_error(cls.name + " produced a count at inadmissible size " +
                                 std::to_string(n));
    return out;
}

std::vector<ClassInfo> list_classes() {
    std::vector<ClassInfo> out;
    for (const ClassDefinition& c : all_classes()) {
        ClassInfo info;
        info.name = c.name;
        info.rooted_rules = static_cast<int>(c.rooted_system.rules.size());
        info.unrooted_rules = static_cast<int>(c.unrooted_system.rules.size());
        info.oeis = c.oeis;
        out.push_back(std::move(info));
    }
    return out;
}

}  // namespace splitenum
