#include "vincyc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "vincyc/characterize.hpp"

namespace vincyc {

namespace {

// Adjacent pair (lead, second) ending at 1-based text position `end`.
struct Pair3 {
    int lead, second, end;
};

// Incremental generator state for the avoider class. A placement is legal
// when it completes none of the six obstructions; only occurrences using the
// new rightmost pair (or, at the last slot, the new final entry) need
// checking, since shorter prefixes were already clean.
struct AState {
    int n;
    std::vector<int> word;
    std::vector<char> used;
    std::vector<Pair3> asc, desc;

    explicit AState(int n_) : n(n_), used(n_ + 1, 0) { word.reserve(n_); }

    bool can_place(int v) const {
        if (used[v]) return false;
        int m = static_cast<int>(word.size()) + 1;
        if (m == 1) return true;
        int a = word[m - 2];
        if (a < v) {
            // Earlier disjoint ascent nesting or straddling the new one.
            for (const auto& pr : asc)
                if (pr.end <= m - 2 && ((pr.lead < a && pr.second > v) ||
                                        (a < pr.lead && pr.second < v)))
                    return false;
        } else {
            for (const auto& pr : desc)
                if (pr.end <= m - 2 && ((pr.second > v && a > pr.lead) ||
                                        (pr.second < v && pr.lead > a)))
                    return false;
            // Descent above the opening entry, not starting at slot 1.
            if (m - 1 >= 2 && word[0] < v) return false;
        }
        if (m == n) {
            // Final entry below some ascent lead.
            for (const auto& pr : asc)
                if (v < pr.lead) return false;
        }
        return true;
    }

    void place(int v) {
        int m = static_cast<int>(word.size()) + 1;
        if (m > 1) {
            int a = word[m - 2];
            if (a < v)
                asc.push_back({a, v, m});
            else
                desc.push_back({a, v, m});
        }
        word.push_back(v);
        used[v] = 1;
    }

    void unplace() {
        int v = word.back();
        int m = static_cast<int>(word.size());
        word.pop_back();
        used[v] = 0;
        if (m > 1) {
            if (word[m - 2] < v)
                asc.pop_back();
            else
                desc.pop_back();
        }
    }

    // The final entry must not undercut any ascent lead; if even the largest
    // unused value does, no completion survives.
    bool dead() const {
        if (static_cast<int>(word.size()) >= n) return false;
        int max_lead = 0;
        for (const auto& pr : asc) max_lead = std::max(max_lead, pr.lead);
        if (max_lead == 0) return false;
        for (int v = n; v >= 1; --v)
            if (!used[v]) return v < max_lead;
        return false;
    }
};

// Generator state for 321-avoiders: mid is the largest value seen so far
// that already has a larger value before it, so any placement below mid
// would complete a descending triple.
struct CState {
    int n;
    std::vector<int> word;
    std::vector<char> used;
    int max_so_far = 0, mid = 0;
    std::vector<std::pair<int, int>> hist;

    explicit CState(int n_) : n(n_), used(n_ + 1, 0) {
        word.reserve(n_);
        hist.reserve(n_);
    }

    bool can_place(int v) const { return !used[v] && v > mid; }

    void place(int v) {
        hist.emplace_back(max_so_far, mid);
        if (v < max_so_far)
            mid = std::max(mid, v);
        else
            max_so_far = v;
        word.push_back(v);
        used[v] = 1;
    }

    void unplace() {
        used[word.back()] = 0;
        word.pop_back();
        max_so_far = hist.back().first;
        mid = hist.back().second;
        hist.pop_back();
    }

    bool dead() const { return false; }
};

// Depth-first walk trying values in increasing order, so leaves arrive in
// lexicographic order. The leaf callback returns false to stop the walk.
template <class State, class Leaf>
void dfs_words(State& st, Leaf&& leaf, bool& stop) {
    if (static_cast<int>(st.word.size()) == st.n) {
        if (!leaf(st.word)) stop = true;
        return;
    }
    for (int v = 1; v <= st.n && !stop; ++v) {
        if (!st.can_place(v)) continue;
        st.place(v);
        if (!st.dead()) dfs_words(st, leaf, stop);
        st.unplace();
    }
}

template <class State>
mpz_class count_sharded(int n, int threads,
                        bool (*accept)(const Permutation&)) {
    if (n < 1) throw std::domain_error("count: n must be >= 1");
    auto count_from = [accept](State& st) {
        mpz_class local = 0;
        bool stop = false;
        dfs_words(
            st,
            [&](const std::vector<int>& w) {
                if (!accept || accept(Permutation(w))) ++local;
                return true;
            },
            stop);
        return local;
    };

    if (threads <= 1 || n < 3) {
        State st(n);
        return count_from(st);
    }

    // Work items are the legal length-2 prefixes, handed out via an atomic
    // cursor; each worker accumulates into its own big integer.
    std::vector<std::array<int, 2>> tasks;
    {
        State probe(n);
        for (int i = 1; i <= n; ++i) {
            if (!probe.can_place(i)) continue;
            probe.place(i);
            if (!probe.dead()) {
                for (int j = 1; j <= n; ++j)
                    if (probe.can_place(j)) tasks.push_back({i, j});
            }
            probe.unplace();
        }
    }
    int workers = std::min<int>(threads, static_cast<int>(tasks.size()));
    if (workers <= 0) return 0;

    std::atomic<std::size_t> cursor{0};
    std::vector<mpz_class> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            State st(n);
            mpz_class local = 0;
            for (;;) {
                std::size_t t = cursor.fetch_add(1);
                if (t >= tasks.size()) break;
                st.place(tasks[t][0]);
                st.place(tasks[t][1]);
                if (!st.dead()) local += count_from(st);
                st.unplace();
                st.unplace();
            }
            partial[w] = local;
        });
    }
    for (auto& th : pool) th.join();

    mpz_class total = 0;
    for (const auto& x : partial) total += x;
    return total;
}

bool accept_cyclic(const Permutation& p) { return is_cyclic(p); }
bool accept_simple(const Permutation& p) { return is_simple(p); }

}  // namespace

void for_each_c321(int n, const std::function<bool(const Permutation&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_c321: n must be >= 1");
    CState st(n);
    bool stop = false;
    dfs_words(
        st,
        [&](const std::vector<int>& w) {
            Permutation p(w);
            return is_cyclic(p) ? fn(p) : true;
        },
        stop);
}

void for_each_A(int n, const std::function<bool(const Permutation&)>& fn) {
    if (n < 1) throw std::domain_error("for_each_A: n must be >= 1");
    AState st(n);
    bool stop = false;
    dfs_words(st, [&](const std::vector<int>& w) { return fn(Permutation(w)); },
              stop);
}

void for_each_321_avoiding(int n,
                           const std::function<bool(const Permutation&)>& fn) {
    if (n < 1)
        throw std::domain_error("for_each_321_avoiding: n must be >= 1");
    CState st(n);
    bool stop = false;
    dfs_words(st, [&](const std::vector<int>& w) { return fn(Permutation(w)); },
              stop);
}

std::vector<Permutation> enumerate_c321(int n) {
    std::vector<Permutation> out;
    for_each_c321(n, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<Permutation> enumerate_c321_via_words(int n) {
    if (n < 1) throw std::domain_error("enumerate_c321_via_words: n must be >= 1");
    if (n == 1) return {Permutation({1})};
    Permutation one({1});
    std::vector<Permutation> out;
    for_each_A(n - 1, [&](const Permutation& tau) {
        out.push_back(theta_inv(skew_sum(one, tau)));
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> enumerate_A(int n) {
    std::vector<Permutation> out;
    for_each_A(n, [&](const Permutation& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

mpz_class count_c(int n, int threads) {
    return count_sharded<CState>(n, threads, &accept_cyclic);
}

mpz_class count_a(int n, int threads) {
    return count_sharded<AState>(n, threads, nullptr);
}

mpz_class count_simples_in_A(int n, int threads) {
    if (n < 2)
        throw std::domain_error("count_simples_in_A: n must be >= 2");
    return count_sharded<AState>(n, threads, &accept_simple);
}

bool is_simple(const Permutation& p) {
    int n = p.size();
    if (n <= 2) return true;
    const auto& w = p.word();
    for (int i = 0; i < n; ++i) {
        int lo = w[i], hi = w[i];
        int last = (i == 0) ? n - 2 : n - 1;
        for (int j = i + 1; j <= last; ++j) {
            lo = std::min(lo, w[j]);
            hi = std::max(hi, w[j]);
            if (hi - lo == j - i) return false;
        }
    }
    return true;
}

std::string provenance_str(Provenance p) {
    switch (p) {
        case Provenance::enumerated: return "enumerated";
        case Provenance::recurrence: return "recurrence";
        case Provenance::paper_table: return "paper-table";
    }
    return "?";
}

std::optional<Provenance> provenance_parse(const std::string& s) {
    if (s == "enumerated") return Provenance::enumerated;
    if (s == "recurrence") return Provenance::recurrence;
    if (s == "paper-table") return Provenance::paper_table;
    return std::nullopt;
}

SequenceTable::SequenceTable(std::string name) : name_(std::move(name)) {
    if (name_ == "c" || name_ == "a")
        base_ = 1;
    else if (name_ == "s")
        base_ = 2;
    else
        throw std::invalid_argument("sequence name must be c, a or s, got \"" +
                                    name_ + "\"");
}

void SequenceTable::set(int n, const mpz_class& value, Provenance prov) {
    if (n < base_)
        throw std::runtime_error("sequence " + name_ + " starts at n=" +
                                 std::to_string(base_) + ", cannot set n=" +
                                 std::to_string(n));
    auto it = values_.find(n);
    if (it == values_.end()) {
        if (n > base_ && !values_.count(n - 1))
            throw std::runtime_error("sequence " + name_ +
                                     " would become non-contiguous at n=" +
                                     std::to_string(n));
        values_.emplace(n, value);
        prov_.emplace(n, prov);
        return;
    }
    if (it->second != value)
        throw std::runtime_error("sequence " + name_ + " conflict at n=" +
                                 std::to_string(n) + ": held " +
                                 it->second.get_str() + ", offered " +
                                 value.get_str());
    auto& held = prov_.at(n);
    if (static_cast<int>(prov) < static_cast<int>(held)) held = prov;
}

const mpz_class& SequenceTable::at(int n) const {
    auto it = values_.find(n);
    if (it == values_.end())
        throw std::out_of_range("sequence " + name_ + " has no entry at n=" +
                                std::to_string(n));
    return it->second;
}

Provenance SequenceTable::provenance_at(int n) const {
    auto it = prov_.find(n);
    if (it == prov_.end())
        throw std::out_of_range("sequence " + name_ + " has no entry at n=" +
                                std::to_string(n));
    return it->second;
}

int SequenceTable::contiguous_through(int first) const {
    int m = first - 1;
    while (values_.count(m + 1)) ++m;
    return m;
}

SequenceTable published_simple_counts() {
    static const unsigned long vals[] = {
        2,       0,        2,        0,         10,        6,
        56,      94,       406,      1000,      3656,      10478,
        35950,   112834,   378818,   1240626,   4180576,   14003702,
        47592074, 161888174, 555182652, 1910032910};
    SequenceTable s("s");
    for (int i = 0; i < 22; ++i)
        s.set(i + 2, mpz_class(vals[i]), Provenance::paper_table);
    return s;
}

mpz_class avoider_convolution(const SequenceTable& s, const SequenceTable& a,
                              int n) {
    if (n < 2)
        throw std::invalid_argument("avoider_convolution: n must be >= 2");
    mpz_class total = 0;
    for (int i = 2; i <= n; ++i) total += s.at(i) * a.at(n - i + 1);
    return total;
}

mpz_class member_convolution(const SequenceTable& s, const SequenceTable& c,
                             int n) {
    if (n < 3)
        throw std::invalid_argument("member_convolution: n must be >= 3");
    mpz_class total = 0;
    for (int i = 2; i <= n - 1; ++i) total += s.at(i) * c.at(n - i + 1);
    return total;
}

SequenceTable s_from_recurrence(const SequenceTable& a) {
    if (!a.has(1))
        throw std::domain_error("s_from_recurrence: a-table must hold a_1");
    int max_n = a.contiguous_through(1);
    SequenceTable s("s");
    for (int n = 2; n <= max_n; ++n) {
        mpz_class val = a.at(n);
        for (int i = 2; i <= n - 1; ++i) val -= s.at(i) * a.at(n - i + 1);
        s.set(n, val, Provenance::recurrence);
    }
    return s;
}

bool verify_recurrence(const SequenceTable& a, const SequenceTable& s,
                       int n_max, std::string* first_failure) {
    for (int n = 2; n <= n_max; ++n) {
        mpz_class rhs = avoider_convolution(s, a, n);
        if (a.at(n) != rhs) {
            if (first_failure)
                *first_failure = "a_" + std::to_string(n) + " = " +
                                 a.at(n).get_str() +
                                 " but the convolution gives " + rhs.get_str();
            return false;
        }
    }
    std::vector<mpz_class> t = composition_totals(s, n_max - 1);
    for (int n = 1; n <= n_max; ++n) {
        if (t[n - 1] != a.at(n)) {
            if (first_failure)
                *first_failure = "t_" + std::to_string(n - 1) + " = " +
                                 t[n - 1].get_str() + " but a_" +
                                 std::to_string(n) + " = " + a.at(n).get_str();
            return false;
        }
    }
    return true;
}

std::vector<mpz_class> composition_totals(const SequenceTable& s, int max_m) {
    if (max_m < 0)
        throw std::invalid_argument("composition_totals: max_m must be >= 0");
    std::vector<mpz_class> t(max_m + 1);
    t[0] = 1;
    for (int m = 1; m <= max_m; ++m)
        for (int j = 1; j <= m; ++j) t[m] += s.at(j + 1) * t[m - j];
    return t;
}

void extend_c_from_s(SequenceTable& c, const SequenceTable& s, int max_n) {
    if (!c.has(1) || !c.has(2))
        throw std::invalid_argument("extend_c_from_s: seeds c_1 and c_2 required");
    for (int n = 3; n <= max_n; ++n)
        c.set(n, member_convolution(s, c, n), Provenance::recurrence);
}

void extend_a_from_s(SequenceTable& a, const SequenceTable& s, int max_n) {
    if (!a.has(1))
        throw std::invalid_argument("extend_a_from_s: seed a_1 required");
    for (int n = 2; n <= max_n; ++n)
        a.set(n, avoider_convolution(s, a, n), Provenance::recurrence);
}

Permutation odot(const Permutation& outer, const Permutation& inner) {
    if (!is_member_direct(theta_inv(outer)) ||
        !is_member_direct(theta_inv(inner)))
        throw std::domain_error(
            "odot: operands must be theta images of members");
    const auto& ow = outer.word();
    const auto& iw = inner.word();
    int n = outer.size();
    int m = inner.size();
    int k = 0;
    while (ow[k] != 1) ++k;
    ++k;  // 1-based position of the minimum; it stays in the prefix
    std::vector<int> out;
    out.reserve(n + m);
    for (int i = 0; i < k; ++i) out.push_back(ow[i] + m);
    out.insert(out.end(), iw.begin(), iw.end());
    for (int i = k; i < n; ++i) out.push_back(ow[i] + m);
    return Permutation(out);
}

Permutation odot_perm(const Permutation& outer, const Permutation& inner) {
    if (!is_member_direct(outer) || !is_member_direct(inner))
        throw std::domain_error("odot_perm: operands must be members");
    return theta_inv(odot(theta(outer), theta(inner)));
}

std::optional<Inflation> decompose_inflation(const Permutation& p) {
    if (!in_A(p))
        throw std::domain_error(
            "decompose_inflation: input outside the avoider class");
    if (is_simple(p)) return std::nullopt;
    int n = p.size();
    std::vector<int> pos(n + 1, 0);
    for (int i = 1; i <= n; ++i) pos[p(i)] = i;

    std::optional<Inflation> found;
    int lo = pos[1], hi = pos[1];
    for (int k = 2; k <= n - 1; ++k) {
        lo = std::min(lo, pos[k]);
        hi = std::max(hi, pos[k]);
        if (hi - lo != k - 1) continue;  // values 1..k not contiguous in text
        std::vector<int> skel;
        skel.reserve(n - k + 1);
        for (int i = 1; i <= n; ++i) {
            if (i == lo)
                skel.push_back(1);
            else if (p(i) > k)
                skel.push_back(p(i) - k + 1);
        }
        Permutation skeleton(skel);
        if (!is_simple(skeleton)) continue;
        if (found)
            throw std::logic_error("decompose_inflation: split not unique for " +
                                   p.str());
        std::vector<int> cont(p.word().begin() + (lo - 1),
                              p.word().begin() + hi);
        found = Inflation{skeleton, Permutation(cont)};
    }
    if (!found)
        throw std::logic_error(
            "decompose_inflation: no simple-skeleton split for " + p.str());
    return found;
}

std::vector<Permutation> lemma_constructions(const Permutation& p) {
    int q = p.size();
    if (q < 3 || !is_simple(p) || !in_A(p))
        throw std::domain_error(
            "lemma_constructions: input must be a simple avoider-class "
            "word of size >= 3");
    const auto& w = p.word();
    int idx = 0;
    while (w[idx] != q) ++idx;
    std::vector<int> left(w.begin(), w.begin() + idx + 1);
    std::vector<int> right(w.begin() + idx + 1, w.end());
    std::vector<int> rl(left.rbegin(), left.rend());
    std::vector<int> rr(right.rbegin(), right.rend());

    auto cat = [](std::initializer_list<const std::vector<int>*> parts) {
        std::vector<int> out;
        for (const auto* part : parts)
            out.insert(out.end(), part->begin(), part->end());
        return out;
    };
    std::vector<int> hi1{q + 1}, hi2{q + 2};
    std::vector<int> w1 = cat({&left, &hi2, &right, &hi1});
    std::vector<int> w2(w1.rbegin(), w1.rend());
    std::vector<int> w3 = cat({&rl, &hi2, &rr, &hi1});
    std::vector<int> w4 = cat({&hi1, &right, &hi2, &left});
    return {Permutation(w1), Permutation(w2), Permutation(w3),
            Permutation(w4)};
}

}  // namespace vincyc
