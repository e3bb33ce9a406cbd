#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vincyc/permutation.hpp"

namespace vincyc {

/// Streams the 321-avoiding cyclic permutations of size n in lexicographic
/// order. Return false from the callback to stop early.
void for_each_c321(int n, const std::function<bool(const Permutation&)>& fn);

/// Streams the avoiders of a_set() of size n in lexicographic order.
void for_each_A(int n, const std::function<bool(const Permutation&)>& fn);

/// Streams every classical-321 avoider of size n in lexicographic order,
/// cyclic or not.
void for_each_321_avoiding(int n,
                           const std::function<bool(const Permutation&)>& fn);

std::vector<Permutation> enumerate_c321(int n);

/// Same set as enumerate_c321(n), reached through the size-(n-1) avoider
/// class: tau -> theta_inv(skew_sum(1, tau)). Sorted ascending.
std::vector<Permutation> enumerate_c321_via_words(int n);

std::vector<Permutation> enumerate_A(int n);

/// Exhaustive counts. threads > 1 shards the search tree over length-2
/// prefixes handed out through an atomic cursor. count_simples_in_A needs
/// n >= 2 (the others n >= 1); std::domain_error below that.
mpz_class count_c(int n, int threads = 1);
mpz_class count_a(int n, int threads = 1);
mpz_class count_simples_in_A(int n, int threads = 1);

/// True when no window of length 2..n-1 maps onto a contiguous value range.
/// Sizes 1 and 2 count as simple.
bool is_simple(const Permutation& p);

/// How a table entry was obtained. Order matters: later sources never
/// overwrite earlier ones when both supply the same value.
enum class Provenance { enumerated, recurrence, paper_table };

std::string provenance_str(Provenance p);
std::optional<Provenance> provenance_parse(const std::string& s);

/// A named integer sequence with per-entry provenance. The name fixes the
/// base index ("c" and "a" start at 1, "s" at 2) and entries must stay
/// contiguous from there. Setting an index to a different value than it
/// already holds is a hard error; setting the same value keeps the more
/// trusted provenance.
class SequenceTable {
public:
    explicit SequenceTable(std::string name);

    const std::string& name() const { return name_; }
    int base_index() const { return base_; }
    void set(int n, const mpz_class& value, Provenance prov);
    bool has(int n) const { return values_.count(n) != 0; }
    const mpz_class& at(int n) const;
    Provenance provenance_at(int n) const;
    /// Largest m with every index in [first, m] present; first-1 if first
    /// itself is missing.
    int contiguous_through(int first) const;
    const std::map<int, mpz_class>& values() const { return values_; }
    const std::map<int, Provenance>& provenance() const { return prov_; }

private:
    std::string name_;
    int base_;
    std::map<int, mpz_class> values_;
    std::map<int, Provenance> prov_;
};

/// Simple-permutation counts s_2..s_23 as published, provenance paper_table.
SequenceTable published_simple_counts();

/// sum_{i=2}^{n} s_i * a_{n-i+1}; equals a_n for n >= 2.
mpz_class avoider_convolution(const SequenceTable& s, const SequenceTable& a,
                              int n);

/// sum_{i=2}^{n-1} s_i * c_{n-i+1}; equals c_n for n >= 3.
mpz_class member_convolution(const SequenceTable& s, const SequenceTable& c,
                             int n);

/// Inverts the avoider convolution: s_2 = a_2 and
/// s_n = a_n - sum_{i=2}^{n-1} s_i a_{n-i+1}. Consumes everything the
/// a-table holds contiguously from index 1 and fills s_2 onward with
/// provenance recurrence (an a-table holding only a_1 gives an empty s).
/// std::domain_error when a_1 is missing.
SequenceTable s_from_recurrence(const SequenceTable& a);

/// Rechecks a_n = sum_{i=2}^{n} s_i a_{n-i+1} for 2 <= n <= n_max, plus the
/// composition form t_{n-1} = a_n where t_0 = 1 and
/// t_m = sum_{j=1}^{m} s_{j+1} t_{m-j}. On the first mismatch returns false
/// and, when given, fills *first_failure with the offending index and sides.
bool verify_recurrence(const SequenceTable& a, const SequenceTable& s,
                       int n_max, std::string* first_failure = nullptr);

/// Weighted composition totals t_0..t_max: t_0 = 1,
/// t_m = sum_{j=1}^{m} s_{j+1} t_{m-j}. Then t_{n-1} equals a_n.
std::vector<mpz_class> composition_totals(const SequenceTable& s, int max_m);

/// Fill a c-table (seeded with indices 1 and 2) or an a-table (seeded with
/// index 1) up to max_n using the convolutions above. Derived values carry
/// provenance recurrence; collisions with existing entries are checked by
/// SequenceTable::set.
void extend_c_from_s(SequenceTable& c, const SequenceTable& s, int max_n);
void extend_a_from_s(SequenceTable& a, const SequenceTable& s, int max_n);

/// Glue product on theta images of members: the outer operand is split just
/// after its minimum, lifted by the size of the inner operand, and the inner
/// operand is spliced in between. Throws std::domain_error unless both
/// arguments are theta images of members.
Permutation odot(const Permutation& outer, const Permutation& inner);

/// The same product transported to the members themselves.
Permutation odot_perm(const Permutation& outer, const Permutation& inner);

struct Inflation {
    Permutation skeleton;  ///< simple; value 1 marks the collapsed window
    Permutation content;   ///< the window, size >= 2
};

/// Splits an avoider-class word into a simple skeleton inflated at its
/// minimum: p == inflate_at(skeleton, 1, content). Simple inputs decompose
/// no further and give nullopt. std::domain_error when p is outside the
/// avoider class; std::logic_error when the split exists but is not unique
/// or a non-simple member admits none (both would contradict the
/// decomposition lemma the class satisfies).
std::optional<Inflation> decompose_inflation(const Permutation& p);

/// The four two-larger extensions of a simple avoider-class word p of size
/// q >= 3, built around the position of its maximum: with p = L M R (M the
/// maximum),
///   w1 = L M (q+2) R (q+1)
///   w2 = reverse(w1)
///   w3 = rev(L M) (q+2) rev(R) (q+1)
///   w4 = (q+1) R (q+2) L M
/// std::domain_error unless p is simple, lies in the avoider class and has
/// size >= 3.
std::vector<Permutation> lemma_constructions(const Permutation& p);

}  // namespace vincyc
