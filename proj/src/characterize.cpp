#include "vincyc/characterize.hpp"

#include <algorithm>
#include <sstream>

namespace vincyc {

bool avoids_classical_321(const Permutation& p) {
    // mid = largest value seen so far that had a larger value before it.
    // Any later value below mid completes a descending triple.
    int max_so_far = 0;
    int mid = 0;
    for (int v : p.word()) {
        if (v < mid) return false;
        if (v < max_so_far) {
            mid = std::max(mid, v);
        } else {
            max_so_far = v;
        }
    }
    return true;
}

bool is_member_direct(const Permutation& p) {
    return is_cyclic(p) && avoids_classical_321(p);
}

bool is_member_theorem(const Permutation& p) {
    Permutation hat = theta(p);
    if (hat(1) != static_cast<int>(hat.size())) return false;
    for (const auto& pat : theorem_set()) {
        if (contains_vincular(hat, pat)) return false;
    }
    return true;
}

bool is_member_depth(const Permutation& p) {
    return is_cyclic(p) && depth(p) == inversions(p);
}

bool is_member_eq1(const Permutation& p) {
    Permutation hat = theta(p);
    if (hat(1) != static_cast<int>(hat.size())) return false;
    return evaluate_expression(hat, eq1_expression()) == 0;
}

bool is_member_arrow(const Permutation& p) {
    Permutation hat = theta(p);
    if (hat(1) != static_cast<int>(hat.size())) return false;
    return evaluate_expression(hat, arrow_obstruction_expression()) == 0;
}

bool in_A(const Permutation& p) {
    for (const auto& pat : a_set()) {
        if (contains_vincular(p, pat)) return false;
    }
    return true;
}

namespace {

PatternWitness witness_from(const std::string& name, const Occurrence& occ) {
    return PatternWitness{name, occ.positions, occ.values};
}

}  // namespace

MembershipReport explain(const Permutation& p) {
    MembershipReport r{.perm = p};
    r.direct = is_member_direct(p);
    r.theorem = is_member_theorem(p);
    r.depth = is_member_depth(p);
    r.eq1 = is_member_eq1(p);
    r.arrow = is_member_arrow(p);
    r.cycles = cycle_decomposition(p);

    if (r.direct) return r;

    if (!avoids_classical_321(p)) {
        VincularPattern pat321 = VincularPattern::parse("321");
        if (auto occ = find_vincular(p, pat321)) {
            r.witnesses.push_back(witness_from("321", *occ));
        }
    }

    Permutation hat = theta(p);
    for (const auto& pat : theorem_set()) {
        if (auto occ = find_vincular(hat, pat)) {
            r.witnesses.push_back(witness_from(pat.str(), *occ));
        }
    }
    {
        const ArrowPattern& ap = arrow_23_1_1to4();
        if (auto occ = find_arrow(hat, ap)) {
            r.witnesses.push_back(witness_from(ap.str(), *occ));
        }
    }
    return r;
}

nlohmann::json MembershipReport::to_json() const {
    nlohmann::json j;
    j["perm"] = perm.str();
    j["n"] = perm.size();
    j["member"] = member();
    j["direct"] = direct;
    j["theorem"] = theorem;
    j["depth"] = depth;
    j["eq1"] = eq1;
    j["arrow"] = arrow;
    j["cycles"] = cycles;
    j["witnesses"] = nlohmann::json::array();
    for (const auto& w : witnesses) {
        j["witnesses"].push_back({{"pattern", w.pattern},
                                  {"positions", w.positions},
                                  {"values", w.values}});
    }
    return j;
}

std::string MembershipReport::str() const {
    std::ostringstream os;
    os << "permutation " << perm.str() << " (n=" << perm.size() << ")\n";
    os << "member: " << (member() ? "yes" : "no") << "\n";
    os << "direct: " << (direct ? "yes" : "no")
       << "  theorem: " << (theorem ? "yes" : "no")
       << "  depth: " << (depth ? "yes" : "no")
       << "  eq1: " << (eq1 ? "yes" : "no")
       << "  arrow: " << (arrow ? "yes" : "no") << "\n";
    os << "cycles:";
    for (const auto& c : cycles) {
        os << " (";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) os << " ";
            os << c[i];
        }
        os << ")";
    }
    os << "\n";
    for (const auto& w : witnesses) {
        // The classical witness lives in the permutation itself; the pattern
        // witnesses live in its theta image.
        os << (w.pattern == "321" ? "witness " : "witness in theta(p): ")
           << w.pattern << " at positions";
        for (int t : w.positions) os << " " << t;
        os << " (values";
        for (int v : w.values) os << " " << v;
        os << ")\n";
    }
    return os.str();
}

}  // namespace vincyc
