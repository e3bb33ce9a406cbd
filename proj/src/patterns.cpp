#include "vincyc/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace vincyc {

namespace {

struct RawPattern {
    std::vector<int> entries;
    std::vector<int> bonds;
    bool anchor_first = false;
    bool anchor_last = false;
};

[[noreturn]] void parse_fail(std::string_view text, size_t pos, const std::string& why) {
    throw std::invalid_argument("pattern \"" + std::string(text) + "\", position " +
                                std::to_string(pos + 1) + ": " + why);
}

// Shared grammar for vincular patterns and arrow-pattern strings; the caller
// decides whether entries must reduce to a permutation.
RawPattern parse_raw(std::string_view text) {
    RawPattern out;
    size_t i = 0;
    if (i < text.size() && text[i] == '^') {
        out.anchor_first = true;
        ++i;
    }
    bool saw_dollar = false;
    while (i < text.size()) {
        char c = text[i];
        if (c == '$') {
            if (i + 1 != text.size()) parse_fail(text, i, "'$' must be last");
            out.anchor_last = true;
            saw_dollar = true;
            ++i;
        } else if (c == '[') {
            size_t close = text.find(']', i);
            if (close == std::string_view::npos) parse_fail(text, i, "unclosed '['");
            std::string_view body = text.substr(i + 1, close - i - 1);
            if (body.empty()) parse_fail(text, i, "empty group");
            std::vector<int> group;
            if (body.find(',') != std::string_view::npos) {
                size_t p = 0;
                while (p <= body.size()) {
                    size_t next = body.find(',', p);
                    std::string_view tok =
                        body.substr(p, next == std::string_view::npos ? next : next - p);
                    int v = 0;
                    for (char d : tok) {
                        if (d < '0' || d > '9')
                            parse_fail(text, i + 1 + p, "bad entry in group");
                        v = v * 10 + (d - '0');
                    }
                    if (tok.empty() || v == 0) parse_fail(text, i + 1 + p, "bad entry in group");
                    group.push_back(v);
                    if (next == std::string_view::npos) break;
                    p = next + 1;
                }
            } else {
                for (size_t p = 0; p < body.size(); ++p) {
                    char d = body[p];
                    if (d < '1' || d > '9') parse_fail(text, i + 1 + p, "bad digit in group");
                    group.push_back(d - '0');
                }
            }
            int slot = static_cast<int>(out.entries.size());
            for (size_t g = 0; g < group.size(); ++g) {
                out.entries.push_back(group[g]);
                if (g + 1 < group.size()) out.bonds.push_back(slot + static_cast<int>(g) + 1);
            }
            i = close + 1;
        } else if (c >= '1' && c <= '9') {
            out.entries.push_back(c - '0');
            ++i;
        } else {
            parse_fail(text, i, std::string("unexpected character '") + c + "'");
        }
        if (saw_dollar && i < text.size()) parse_fail(text, i, "'$' must be last");
    }
    if (out.entries.empty()) parse_fail(text, 0, "no entries");
    return out;
}

std::string spell(const std::vector<int>& entries, const std::vector<int>& bonds,
                  bool anchor_first, bool anchor_last) {
    const int k = static_cast<int>(entries.size());
    auto bonded = [&](int slot) {
        return std::find(bonds.begin(), bonds.end(), slot) != bonds.end();
    };
    const bool commas = *std::max_element(entries.begin(), entries.end()) > 9;
    std::string out;
    if (anchor_first) out += '^';
    int i = 0;
    while (i < k) {
        int j = i;
        while (j + 1 < k && bonded(j + 1)) ++j;  // group covers entries i..j
        const bool wrap = j > i || commas;
        if (wrap) out += '[';
        for (int t = i; t <= j; ++t) {
            if (commas) {
                if (t > i) out += ',';
                out += std::to_string(entries[t]);
            } else {
                out += static_cast<char>('0' + entries[t]);
            }
        }
        if (wrap) out += ']';
        i = j + 1;
    }
    if (anchor_last) out += '$';
    return out;
}

// Backtracking matcher shared by counting, containment, witness search, and
// arrow-core enumeration. `on_hit` gets positions; returning false stops.
struct Matcher {
    const std::vector<int>& text;
    const std::vector<int>& base;
    const std::vector<char>& bonded_after;  // slot i (0-based): entries i, i+1 bonded
    bool anchor_first;
    bool anchor_last;
    const std::function<bool(const std::vector<int>&)>& on_hit;

    int n;
    int k;
    std::vector<int> pos;
    bool stopped = false;

    Matcher(const std::vector<int>& text_, const std::vector<int>& base_,
            const std::vector<char>& bonds_, bool af, bool al,
            const std::function<bool(const std::vector<int>&)>& hit)
        : text(text_), base(base_), bonded_after(bonds_), anchor_first(af),
          anchor_last(al), on_hit(hit), n(static_cast<int>(text_.size())),
          k(static_cast<int>(base_.size())) {
        pos.reserve(k);
    }

    bool order_ok(int j, int t) const {
        const int vj = text[t - 1];
        for (int i = 0; i < j; ++i) {
            const int vi = text[pos[i] - 1];
            if ((base[i] < base[j]) != (vi < vj)) return false;
        }
        return true;
    }

    void try_position(int j, int t) {
        if (t < 1 || t > n) return;
        if (n - t < k - 1 - j) return;  // not enough room to the right
        if (anchor_last && j == k - 1 && t != n) return;
        if (!order_ok(j, t)) return;
        pos.push_back(t);
        if (j == k - 1) {
            if (!on_hit(pos)) stopped = true;
        } else {
            descend(j + 1);
        }
        pos.pop_back();
    }

    void descend(int j) {
        if (stopped) return;
        if (j == 0) {
            if (anchor_first) {
                try_position(0, 1);
            } else {
                for (int t = 1; t <= n && !stopped; ++t) try_position(0, t);
            }
            return;
        }
        if (bonded_after[j - 1]) {
            try_position(j, pos[j - 1] + 1);
        } else {
            for (int t = pos[j - 1] + 1; t <= n && !stopped; ++t) try_position(j, t);
        }
    }

    void run() {
        if (k <= n) descend(0);
    }
};

std::vector<char> bond_flags(int k, const std::vector<int>& bonds) {
    std::vector<char> f(std::max(k - 1, 0), 0);
    for (int b : bonds) {
        if (b < 1 || b >= k) throw std::invalid_argument("bond index out of range");
        f[b - 1] = 1;
    }
    return f;
}

void for_each_occurrence(const Permutation& text, const std::vector<int>& base,
                         const std::vector<int>& bonds, bool af, bool al,
                         const std::function<bool(const std::vector<int>&)>& fn) {
    const std::vector<char> flags = bond_flags(static_cast<int>(base.size()), bonds);
    Matcher m(text.word(), base, flags, af, al, fn);
    m.run();
}

Occurrence to_occurrence(const Permutation& text, const std::vector<int>& pos) {
    Occurrence occ;
    occ.positions = pos;
    occ.values.reserve(pos.size());
    for (int t : pos) occ.values.push_back(text(t));
    return occ;
}

}  // namespace

VincularPattern VincularPattern::parse(std::string_view text) {
    RawPattern raw = parse_raw(text);
    VincularPattern pat{Permutation(raw.entries), std::move(raw.bonds),
                        raw.anchor_first, raw.anchor_last};
    return pat;
}

VincularPattern parse_pattern(std::string_view text) { return VincularPattern::parse(text); }

std::string VincularPattern::str() const {
    return spell(base.word(), bonds, anchor_first, anchor_last);
}

bool VincularPattern::bonded(int slot) const {
    return std::find(bonds.begin(), bonds.end(), slot) != bonds.end();
}

long long count_vincular(const Permutation& text, const VincularPattern& pat) {
    long long count = 0;
    for_each_occurrence(text, pat.base.word(), pat.bonds, pat.anchor_first, pat.anchor_last,
                        [&](const std::vector<int>&) {
                            ++count;
                            return true;
                        });
    return count;
}

bool contains_vincular(const Permutation& text, const VincularPattern& pat) {
    bool found = false;
    for_each_occurrence(text, pat.base.word(), pat.bonds, pat.anchor_first, pat.anchor_last,
                        [&](const std::vector<int>&) {
                            found = true;
                            return false;
                        });
    return found;
}

std::optional<Occurrence> find_vincular(const Permutation& text, const VincularPattern& pat) {
    std::optional<Occurrence> out;
    for_each_occurrence(text, pat.base.word(), pat.bonds, pat.anchor_first, pat.anchor_last,
                        [&](const std::vector<int>& pos) {
                            out = to_occurrence(text, pos);
                            return false;
                        });
    return out;
}

VincularPattern ArrowPattern::core() const {
    return VincularPattern{reduce(indices), bonds, anchor_first, anchor_last};
}

std::string ArrowPattern::str() const {
    std::string out = spell(indices, bonds, anchor_first, anchor_last);
    out += '{';
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(arrows[i].first) + "->" + std::to_string(arrows[i].second);
    }
    out += '}';
    return out;
}

ArrowPattern make_arrow(std::string_view spelling, int k,
                        std::vector<std::pair<int, int>> arrows) {
    RawPattern raw = parse_raw(spelling);
    ArrowPattern pat;
    pat.k = k;
    pat.indices = std::move(raw.entries);
    pat.bonds = std::move(raw.bonds);
    pat.anchor_first = raw.anchor_first;
    pat.anchor_last = raw.anchor_last;
    pat.arrows = std::move(arrows);

    std::vector<char> covered(k + 1, 0);
    std::vector<char> seen(k + 1, 0);
    for (int idx : pat.indices) {
        if (idx < 1 || idx > k)
            throw std::invalid_argument("arrow pattern rank " + std::to_string(idx) +
                                        " out of 1.." + std::to_string(k));
        if (seen[idx])
            throw std::invalid_argument("arrow pattern repeats rank " + std::to_string(idx));
        seen[idx] = covered[idx] = 1;
    }
    for (auto [b, c] : pat.arrows) {
        if (b < 1 || b > k || c < 1 || c > k)
            throw std::invalid_argument("arrow endpoint out of 1.." + std::to_string(k));
        covered[b] = covered[c] = 1;
    }
    for (int r = 1; r <= k; ++r)
        if (!covered[r])
            throw std::invalid_argument("rank " + std::to_string(r) +
                                        " neither visible nor touched by an arrow");
    return pat;
}

namespace {

// Witness-set solver for one core occurrence. `val[r]` is the value assigned
// to rank r (0 = unassigned), `used` marks taken values. Arrows with a known
// source force the target through sigma; a known target forces the source
// through sigma^{-1}. Arrows with both ends open are resolved by search.
struct WitnessSolver {
    const std::vector<int>& sig;   // sigma as a lookup, 1-based
    const std::vector<int>& sinv;  // sigma^{-1}
    const std::vector<std::pair<int, int>>& arrows;
    int n;
    int k;

    bool feasible(std::vector<int> val, std::vector<char> used) const {
        // Forced propagation to a fixed point.
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto [b, c] : arrows) {
                if (val[b] && val[c]) {
                    if (sig[val[b]] != val[c]) return false;
                } else if (val[b]) {
                    int v = sig[val[b]];
                    if (used[v]) return false;
                    val[c] = v;
                    used[v] = 1;
                    changed = true;
                } else if (val[c]) {
                    int v = sinv[val[c]];
                    if (used[v]) return false;
                    val[b] = v;
                    used[v] = 1;
                    changed = true;
                }
            }
        }
        for (auto [b, c] : arrows) {
            if (val[b]) continue;
            (void)c;
            for (int v = 1; v <= n; ++v) {
                if (used[v]) continue;
                std::vector<int> val2 = val;
                std::vector<char> used2 = used;
                val2[b] = v;
                used2[v] = 1;
                if (feasible(std::move(val2), std::move(used2))) return true;
            }
            return false;
        }
        return embeds(val);
    }

    // Assigned ranks must be strictly increasing in value, and every run of
    // open ranks needs enough spare integers between (or outside) its
    // assigned neighbors.
    bool embeds(const std::vector<int>& val) const {
        int last_rank = 0;
        int last_val = 0;
        for (int r = 1; r <= k; ++r) {
            if (!val[r]) continue;
            if (val[r] <= last_val) return false;
            if (val[r] - last_val - 1 < r - last_rank - 1) return false;
            last_rank = r;
            last_val = val[r];
        }
        return n - last_val >= k - last_rank;
    }
};

void for_each_arrow_occurrence(const Permutation& text, const ArrowPattern& pat,
                               const std::function<bool(const std::vector<int>&)>& fn) {
    const int n = text.size();
    if (static_cast<int>(pat.indices.size()) > n || pat.k > n) return;

    const Permutation sigma = theta_inv(text);
    std::vector<int> sig(n + 1), sinv(n + 1);
    for (int i = 1; i <= n; ++i) {
        sig[i] = sigma(i);
        sinv[sigma(i)] = i;
    }
    WitnessSolver solver{sig, sinv, pat.arrows, n, pat.k};

    std::vector<int> ranks_sorted = pat.indices;
    std::sort(ranks_sorted.begin(), ranks_sorted.end());
    const std::vector<int> core_base = pat.core().base.word();

    for_each_occurrence(text, core_base, pat.bonds, pat.anchor_first, pat.anchor_last,
                        [&](const std::vector<int>& pos) {
                            std::vector<int> vals;
                            vals.reserve(pos.size());
                            for (int t : pos) vals.push_back(text(t));
                            std::vector<int> sorted_vals = vals;
                            std::sort(sorted_vals.begin(), sorted_vals.end());
                            std::vector<int> val(pat.k + 1, 0);
                            std::vector<char> used(n + 1, 0);
                            for (size_t i = 0; i < ranks_sorted.size(); ++i) {
                                val[ranks_sorted[i]] = sorted_vals[i];
                                used[sorted_vals[i]] = 1;
                            }
                            if (solver.feasible(std::move(val), std::move(used)))
                                return fn(pos);
                            return true;
                        });
}

}  // namespace

long long count_arrow(const Permutation& text, const ArrowPattern& pat) {
    long long count = 0;
    for_each_arrow_occurrence(text, pat, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

bool contains_arrow(const Permutation& text, const ArrowPattern& pat) {
    bool found = false;
    for_each_arrow_occurrence(text, pat, [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

std::optional<Occurrence> find_arrow(const Permutation& text, const ArrowPattern& pat) {
    std::optional<Occurrence> out;
    for_each_arrow_occurrence(text, pat, [&](const std::vector<int>& pos) {
        out = to_occurrence(text, pos);
        return false;
    });
    return out;
}

long long evaluate_expression(const Permutation& text, const PatternExpression& expr) {
    long long total = 0;
    for (const PatternTerm& term : expr.terms) {
        long long c = std::visit(
            [&](const auto& p) -> long long {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, VincularPattern>)
                    return count_vincular(text, p);
                else
                    return count_arrow(text, p);
            },
            term.pattern);
        total += term.coeff * c;
    }
    return total;
}

VincularPattern reverse_pattern(const VincularPattern& pat) {
    const int k = pat.base.size();
    VincularPattern out{reverse(pat.base), {}, pat.anchor_last, pat.anchor_first};
    for (int b : pat.bonds) out.bonds.push_back(k - b);
    std::sort(out.bonds.begin(), out.bonds.end());
    return out;
}

namespace {

PatternExpression expr_from(std::initializer_list<std::pair<long long, const char*>> vincs,
                            std::initializer_list<std::pair<long long, const ArrowPattern*>>
                                arrows = {}) {
    PatternExpression e;
    for (auto [c, s] : vincs) e.terms.push_back({c, parse_pattern(s)});
    for (auto [c, a] : arrows) e.terms.push_back({c, *a});
    return e;
}

}  // namespace

const std::vector<VincularPattern>& theorem_set() {
    static const std::vector<VincularPattern> set = [] {
        std::vector<VincularPattern> v;
        for (const char* s : {"[32][41]", "[14][23]", "[41][32]", "[23][14]", "[23]1$"})
            v.push_back(parse_pattern(s));
        return v;
    }();
    return set;
}

const std::vector<VincularPattern>& a_set() {
    static const std::vector<VincularPattern> set = [] {
        std::vector<VincularPattern> v = theorem_set();
        v.push_back(parse_pattern("^1[32]"));
        return v;
    }();
    return set;
}

const PatternExpression& eq1_expression() {
    static const PatternExpression e = expr_from({{1, "[231]"},
                                                  {1, "[23][41]"},
                                                  {1, "[24][31]"},
                                                  {1, "[32][41]"},
                                                  {1, "[14][23]"},
                                                  {1, "[41][32]"},
                                                  {-1, "[24][13]"}});
    return e;
}

const ArrowPattern& arrow_23_1_1to4() {
    static const ArrowPattern p = make_arrow("[23]1", 4, {{1, 4}});
    return p;
}

const ArrowPattern& arrow_2_31_2to2() {
    static const ArrowPattern p = make_arrow("2[31]", 3, {{2, 2}});
    return p;
}

const ArrowPattern& arrow_2_41_2to3() {
    static const ArrowPattern p = make_arrow("2[41]", 4, {{2, 3}});
    return p;
}

const ArrowPattern& arrow_2_31_2to4() {
    static const ArrowPattern p = make_arrow("2[31]", 4, {{2, 4}});
    return p;
}

const ArrowPattern& arrow_231_2to3() {
    static const ArrowPattern p = make_arrow("[231]", 3, {{2, 3}});
    return p;
}

const PatternExpression& arrow_obstruction_expression() {
    static const PatternExpression e = expr_from(
        {{1, "[32][41]"}, {1, "[14][23]"}, {1, "[41][32]"}}, {{1, &arrow_23_1_1to4()}});
    return e;
}

const PatternExpression& depth_excess_expression() {
    static const PatternExpression e = expr_from({{1, "2[31]"},
                                                  {1, "[14][23]"},
                                                  {1, "[41][32]"},
                                                  {1, "[24][13]"},
                                                  {1, "[31][42]"}});
    return e;
}

const PatternExpression& length_excess_expression() {
    static const PatternExpression e =
        expr_from({{1, "2[31]"}, {1, "[14][23]"}, {1, "[41][32]"}});
    return e;
}

}  // namespace vincyc
