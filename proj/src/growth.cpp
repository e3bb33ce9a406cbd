#include "vincyc/growth.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace vincyc {

namespace {

mpq_class series_value(const SequenceTable& s, int head_max,
                       const std::optional<TailSpec>& tail,
                       const mpq_class& r) {
    // Horner from the top: sum_{i=2}^{head_max+1} s_i r^{-(i-1)}.
    mpq_class acc = 0;
    for (int i = head_max + 1; i >= 2; --i) {
        acc += s.at(i);
        acc /= r;
    }
    if (tail) {
        int e = head_max + 2 - tail->coeff_index;
        if (e < 0)
            throw std::invalid_argument(
                "lower_bound_root: tail coefficient index beyond head");
        mpz_class bpow;
        mpz_ui_pow_ui(bpow.get_mpz_t(), tail->base,
                      static_cast<unsigned long>(e));
        mpq_class rpow = 1;
        for (int i = 0; i < head_max; ++i) rpow *= r;
        acc += mpq_class(s.at(tail->coeff_index) * bpow) /
               (rpow * (r - mpq_class(tail->base)));
    }
    return acc;
}

}  // namespace

double lower_bound_root(const SequenceTable& s, int head_max,
                        std::optional<TailSpec> tail, double tol) {
    if (head_max < 1)
        throw std::invalid_argument("lower_bound_root: head_max must be >= 1");
    if (tol <= 0) throw std::invalid_argument("lower_bound_root: tol must be > 0");

    mpq_class lo(1, 1000000);
    if (tail) lo += static_cast<long>(tail->base);
    mpq_class hi = 8;

    if (series_value(s, head_max, tail, lo) <= 1)
        throw std::domain_error("lower_bound_root: root at or below tail base");
    if (series_value(s, head_max, tail, hi) > 1)
        throw std::domain_error("lower_bound_root: no sign change in bracket");

    mpq_class width_goal(tol);
    while (hi - lo > width_goal) {
        mpq_class mid = (lo + hi) / 2;
        if (series_value(s, head_max, tail, mid) > 1)
            lo = mid;
        else
            hi = mid;
    }
    // The series decreases in r and still exceeds 1 at lo, so the root lies
    // above lo: rounding never overstates it.
    return lo.get_d();
}

IdentityCheck conditional_upper_identity(const SequenceTable& c,
                                         const SequenceTable& s, int n) {
    if (n < 3)
        throw std::invalid_argument(
            "conditional_upper_identity: n must be >= 3");
    mpz_class lhs = 4 * c.at(n - 1) - c.at(n);
    mpz_class rhs = -s.at(n - 1);
    for (int i = 2; i <= n - 2; ++i)
        rhs += s.at(n - i) * (4 * c.at(i) - c.at(i + 1));
    return {n, lhs, rhs, lhs == rhs};
}

std::vector<RatioBound> ratio_bounds(const SequenceTable& c, int first,
                                     int last) {
    std::vector<RatioBound> out;
    for (int n = first; n <= last; ++n) {
        mpq_class ratio(c.at(n), c.at(n - 1));
        ratio.canonicalize();
        out.push_back({n, ratio, c.at(n) >= 2 * c.at(n - 1),
                       c.at(n) <= 4 * c.at(n - 1)});
    }
    return out;
}

std::vector<SuperMultCheck> supermultiplicative_check(const SequenceTable& c,
                                                      int max_total) {
    std::vector<SuperMultCheck> out;
    for (int m = 1; 2 * m <= max_total; ++m) {
        for (int n = m; m + n <= max_total; ++n) {
            mpz_class product = c.at(m) * c.at(n);
            const mpz_class& combined = c.at(m + n);
            out.push_back({m, n, product, combined, combined >= product});
        }
    }
    return out;
}

namespace {

std::vector<FloorCheck> two_step_floor(const SequenceTable& s, unsigned factor,
                                       int first_n, int last_n) {
    if (last_n < 0) last_n = s.contiguous_through(2);
    std::vector<FloorCheck> out;
    for (int n = first_n; n <= last_n; ++n) {
        mpz_class rhs = factor * s.at(n - 2);
        out.push_back({n, s.at(n), rhs, s.at(n) >= rhs});
    }
    return out;
}

}  // namespace

std::vector<FloorCheck> tail_growth_floor(const SequenceTable& s, int first_n,
                                          int last_n) {
    return two_step_floor(s, 4, first_n, last_n);
}

std::vector<FloorCheck> ninefold_floor_report(const SequenceTable& s,
                                              int first_n, int last_n) {
    return two_step_floor(s, 9, first_n, last_n);
}

GrowthReport ratio_and_root_report(const SequenceTable& c) {
    GrowthReport rep;
    int base = c.base_index();
    int top = c.contiguous_through(base);
    double prev_root = 0;
    for (int n = base; n <= top; ++n) {
        if (n > base && c.at(n - 1) != 0) {
            mpq_class ratio(c.at(n), c.at(n - 1));
            ratio.canonicalize();
            rep.ratios.emplace_back(n, ratio);
        }
        double root = std::pow(c.at(n).get_d(), 1.0 / n);
        rep.roots.emplace_back(n, root);
        if (n > base && root < prev_root) rep.root_decreases.push_back(n);
        if (root > rep.lower_bound) rep.lower_bound = root;
        prev_root = root;
    }
    return rep;
}

nlohmann::json GrowthReport::to_json() const {
    nlohmann::json j;
    j["ratios"] = nlohmann::json::array();
    for (const auto& [n, q] : ratios)
        j["ratios"].push_back({{"n", n},
                               {"exact", q.get_str()},
                               {"value", q.get_d()}});
    j["roots"] = nlohmann::json::array();
    for (const auto& [n, r] : roots)
        j["roots"].push_back({{"n", n}, {"value", r}});
    j["lower_bound"] = lower_bound;
    j["identity_checks"] = nlohmann::json::array();
    for (const auto& [n, ok] : identity_checks)
        j["identity_checks"].push_back({{"n", n}, {"holds", ok}});
    j["root_decreases"] = root_decreases;
    return j;
}

std::string GrowthReport::str() const {
    std::ostringstream os;
    os << std::setprecision(10);
    os << "   n  c_n/c_(n-1)      c_n^(1/n)\n";
    std::size_t ri = 0;
    for (const auto& [n, root] : roots) {
        os << std::setw(4) << n << "  ";
        if (ri < ratios.size() && ratios[ri].first == n) {
            os << std::setw(11) << ratios[ri].second.get_d();
            ++ri;
        } else {
            os << std::setw(11) << "-";
        }
        os << "  " << std::setw(13) << root << "\n";
    }
    os << "growth rate lower estimate (max root): " << lower_bound << "\n";
    if (!identity_checks.empty()) {
        int bad = 0;
        for (const auto& [n, ok] : identity_checks)
            if (!ok) ++bad;
        os << "ratio-gap identity: " << identity_checks.size() - bad << "/"
           << identity_checks.size() << " indices agree\n";
        for (const auto& [n, ok] : identity_checks)
            if (!ok) os << "  mismatch at n = " << n << "\n";
    }
    if (root_decreases.empty()) {
        os << "n-th roots never decrease on this table\n";
    } else {
        os << "n-th root decreases at:";
        for (int n : root_decreases) os << " " << n;
        os << "\n";
    }
    return os.str();
}

}  // namespace vincyc
