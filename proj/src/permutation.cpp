#include "vincyc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace vincyc {

namespace {

void validate(const std::vector<int>& word) {
    const int n = static_cast<int>(word.size());
    if (n == 0) throw std::invalid_argument("permutation must be nonempty");
    std::vector<char> seen(n + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n)
            throw std::invalid_argument("entry " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(n));
        if (seen[v])
            throw std::invalid_argument("duplicate entry " + std::to_string(v));
        seen[v] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    validate(word_);
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw std::invalid_argument("identity requires n >= 1");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty permutation text");

    std::vector<int> word;
    if (text.find(',') != std::string_view::npos) {
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string_view tok =
                trim(text.substr(pos, next == std::string_view::npos ? next : next - pos));
            int v = 0;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size() || tok.empty())
                throw std::invalid_argument("bad entry '" + std::string(tok) + "'");
            word.push_back(v);
            if (next == std::string_view::npos) break;
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument(std::string("bad character '") + c +
                                            "' in digit form (use commas for entries above 9)");
            word.push_back(c - '0');
        }
    }
    return Permutation(std::move(word));
}

std::string Permutation::str() const {
    std::string out;
    if (size() <= 9) {
        for (int v : word_) out += static_cast<char>('0' + v);
    } else {
        for (size_t i = 0; i < word_.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(word_[i]);
        }
    }
    return out;
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    std::vector<Cycle> cycles;
    for (int v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        Cycle cyc{v};
        seen[v] = 1;
        for (int x = p(v); x != v; x = p(x)) {
            cyc.push_back(x);
            seen[x] = 1;
        }
        auto mx = std::max_element(cyc.begin(), cyc.end());
        std::rotate(cyc.begin(), mx, cyc.end());
        cycles.push_back(std::move(cyc));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
    return cycles;
}

int cycle_count(const Permutation& p) {
    const int n = p.size();
    std::vector<char> seen(n + 1, 0);
    int count = 0;
    for (int v = 1; v <= n; ++v) {
        if (seen[v]) continue;
        ++count;
        for (int x = v; !seen[x]; x = p(x)) seen[x] = 1;
    }
    return count;
}

bool is_cyclic(const Permutation& p) { return cycle_count(p) == 1; }

Permutation theta(const Permutation& p) {
    std::vector<int> word;
    word.reserve(p.size());
    for (const Cycle& cyc : cycle_decomposition(p))
        word.insert(word.end(), cyc.begin(), cyc.end());
    return Permutation(std::move(word));
}

Permutation theta_inv(const Permutation& w) {
    const int n = w.size();
    const std::vector<int>& word = w.word();
    std::vector<int> img(n + 1, 0);
    int start = 0;
    int mx = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == n || word[i] > mx) {
            if (i > 0) {
                for (int j = start; j + 1 < i; ++j) img[word[j]] = word[j + 1];
                img[word[i - 1]] = word[start];
            }
            if (i < n) {
                start = i;
                mx = word[i];
            }
        }
    }
    std::vector<int> out(n);
    for (int v = 1; v <= n; ++v) out[v - 1] = img[v];
    return Permutation(std::move(out));
}

int depth(const Permutation& p) {
    int d = 0;
    for (int i = 1; i <= p.size(); ++i)
        if (p(i) > i) d += p(i) - i;
    return d;
}

int inversions(const Permutation& p) {
    int inv = 0;
    const auto& w = p.word();
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

int reflection_length(const Permutation& p) { return p.size() - cycle_count(p); }

Permutation reverse(const Permutation& p) {
    std::vector<int> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

Permutation inverse(const Permutation& p) {
    std::vector<int> w(p.size());
    for (int i = 1; i <= p.size(); ++i) w[p(i) - 1] = i;
    return Permutation(std::move(w));
}

Permutation direct_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> w = a.word();
    for (int v : b.word()) w.push_back(v + a.size());
    return Permutation(std::move(w));
}

Permutation skew_sum(const Permutation& a, const Permutation& b) {
    std::vector<int> w;
    w.reserve(a.size() + b.size());
    for (int v : a.word()) w.push_back(v + b.size());
    for (int v : b.word()) w.push_back(v);
    return Permutation(std::move(w));
}

Permutation inflate_at(const Permutation& p, int a, const Permutation& q) {
    if (a < 1 || a > p.size())
        throw std::domain_error("inflate_at: value " + std::to_string(a) +
                                " not present in a permutation of size " +
                                std::to_string(p.size()));
    const int k = q.size();
    std::vector<int> w;
    w.reserve(p.size() + k - 1);
    for (int v : p.word()) {
        if (v < a) {
            w.push_back(v);
        } else if (v > a) {
            w.push_back(v + k - 1);
        } else {
            for (int u : q.word()) w.push_back(u + a - 1);
        }
    }
    return Permutation(std::move(w));
}

Permutation inflate_at_one(const Permutation& p, const Permutation& q) {
    return inflate_at(p, 1, q);
}

Permutation reduce(const std::vector<int>& values) {
    if (values.empty()) throw std::invalid_argument("reduce: empty input");
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("reduce: entries must be distinct");
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return Permutation(std::move(out));
}

}  // namespace vincyc
