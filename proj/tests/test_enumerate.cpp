#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "vincyc/characterize.hpp"
#include "vincyc/enumerate.hpp"

using namespace vincyc;

namespace {

const std::vector<long> kMemberCounts = {1, 1, 2, 4, 10, 24, 66, 178, 512};    // c_1..c_9
const std::vector<long> kWordCounts = {1, 2, 4, 10, 24, 66, 178, 512};         // a_1..a_8

}  // namespace

TEST_CASE("enumerating members matches the counts") {
    for (int n = 1; n <= 7; ++n) {
        auto members = enumerate_c321(n);
        CHECK(members.size() == static_cast<std::size_t>(kMemberCounts[n - 1]));
        CHECK(std::is_sorted(members.begin(), members.end()));
        for (const Permutation& p : members) CHECK(is_member_direct(p));
    }
}

TEST_CASE("both enumeration strategies agree") {
    for (int n = 1; n <= 7; ++n)
        CHECK(enumerate_c321(n) == enumerate_c321_via_words(n));
}

TEST_CASE("enumerating words matches the counts") {
    for (int n = 1; n <= 7; ++n) {
        auto words = enumerate_A(n);
        CHECK(words.size() == static_cast<std::size_t>(kWordCounts[n - 1]));
        CHECK(std::is_sorted(words.begin(), words.end()));
        for (const Permutation& p : words) CHECK(in_A(p));
    }
}

TEST_CASE("callbacks can stop early") {
    int seen = 0;
    for_each_A(5, [&](const Permutation&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);

    seen = 0;
    for_each_c321(5, [&](const Permutation&) {
        ++seen;
        return seen < 3;
    });
    CHECK(seen == 3);
}

TEST_CASE("streaming the plain 321 avoiders hits the Catalan numbers") {
    const long catalan[] = {1, 2, 5, 14, 42, 132};
    for (int n = 1; n <= 6; ++n) {
        long seen = 0;
        for_each_321_avoiding(n, [&](const Permutation& p) {
            CHECK(avoids_classical_321(p));
            ++seen;
            return true;
        });
        CHECK(seen == catalan[n - 1]);
    }
}

TEST_CASE("counting works sharded and unsharded") {
    CHECK(count_c(8) == 178);
    CHECK(count_c(9, 4) == 512);
    CHECK(count_a(6) == 66);
    CHECK(count_a(8, 4) == 512);
    CHECK(count_simples_in_A(2) == 2);
    CHECK(count_simples_in_A(3) == 0);
    CHECK(count_simples_in_A(4) == 2);
    CHECK(count_simples_in_A(6) == 10);
    CHECK(count_simples_in_A(7) == 6);
    CHECK(count_simples_in_A(8, 4) == 56);
}

TEST_CASE("size bounds are enforced") {
    CHECK_THROWS_AS(count_c(0), std::domain_error);
    CHECK_THROWS_AS(count_a(0), std::domain_error);
    CHECK_THROWS_AS(count_simples_in_A(1), std::domain_error);
    CHECK_THROWS_AS(for_each_c321(0, [](const Permutation&) { return true; }),
                    std::domain_error);
}

TEST_CASE("simplicity") {
    for (const char* s : {"1", "12", "21", "2413", "3142", "24153", "246135"})
        CHECK(is_simple(Permutation::parse(s)));
    for (const char* s : {"123", "213", "132", "321", "615432", "513426", "2134"})
        CHECK_FALSE(is_simple(Permutation::parse(s)));
}

TEST_CASE("sequence tables enforce their shape") {
    CHECK_THROWS_AS(SequenceTable("x"), std::invalid_argument);
    CHECK(SequenceTable("c").base_index() == 1);
    CHECK(SequenceTable("a").base_index() == 1);
    CHECK(SequenceTable("s").base_index() == 2);

    SequenceTable t("c");
    CHECK_THROWS_AS(t.set(0, 1, Provenance::enumerated), std::runtime_error);
    t.set(1, 1, Provenance::enumerated);
    CHECK_THROWS_AS(t.set(3, 2, Provenance::enumerated), std::runtime_error);
    t.set(2, 1, Provenance::enumerated);
    t.set(3, 2, Provenance::enumerated);
    CHECK(t.contiguous_through(1) == 3);
    CHECK(t.contiguous_through(2) == 3);
    CHECK(t.contiguous_through(5) == 4);  // 5 itself missing
    CHECK(t.at(3) == 2);
    CHECK_THROWS_AS(t.at(9), std::out_of_range);
    CHECK_THROWS_AS(t.provenance_at(9), std::out_of_range);

    // Conflicting value: hard error. Same value: keep the better provenance.
    CHECK_THROWS_AS(t.set(3, 7, Provenance::recurrence), std::runtime_error);
    t.set(3, 2, Provenance::paper_table);
    CHECK(t.provenance_at(3) == Provenance::enumerated);
    SequenceTable u("s");
    u.set(2, 2, Provenance::paper_table);
    u.set(2, 2, Provenance::enumerated);
    CHECK(u.provenance_at(2) == Provenance::enumerated);
}

TEST_CASE("provenance names round trip") {
    for (Provenance p : {Provenance::enumerated, Provenance::recurrence,
                         Provenance::paper_table})
        CHECK(provenance_parse(provenance_str(p)) == p);
    CHECK_FALSE(provenance_parse("guesswork").has_value());
}

TEST_CASE("the embedded simple counts") {
    SequenceTable s = published_simple_counts();
    CHECK(s.name() == "s");
    CHECK(s.base_index() == 2);
    CHECK(s.contiguous_through(2) == 23);
    CHECK(s.at(2) == 2);
    CHECK(s.at(3) == 0);
    CHECK(s.at(6) == 10);
    CHECK(s.at(12) == 3656);
    CHECK(s.at(22) == mpz_class("555182652"));
    CHECK(s.at(23) == mpz_class("1910032910"));
    CHECK(s.provenance_at(23) == Provenance::paper_table);
}

TEST_CASE("convolutions by hand") {
    SequenceTable a("a"), s("s"), c("c");
    long av[] = {1, 2, 4, 10};
    for (int n = 1; n <= 4; ++n) a.set(n, av[n - 1], Provenance::enumerated);
    s.set(2, 2, Provenance::enumerated);
    s.set(3, 0, Provenance::enumerated);
    s.set(4, 2, Provenance::enumerated);
    c.set(1, 1, Provenance::enumerated);
    c.set(2, 1, Provenance::enumerated);
    c.set(3, 2, Provenance::enumerated);

    CHECK(avoider_convolution(s, a, 4) == 10);  // 2*4 + 0*2 + 2*1
    CHECK(avoider_convolution(s, a, 2) == 2);
    CHECK(member_convolution(s, c, 4) == 4);  // 2*2 + 0*1
    CHECK(member_convolution(s, c, 3) == 2);
    CHECK_THROWS_AS(member_convolution(s, c, 2), std::invalid_argument);
}

TEST_CASE("simple counts fall out of the avoider counts") {
    SequenceTable a("a");
    for (int n = 1; n <= 8; ++n)
        a.set(n, kWordCounts[n - 1], Provenance::enumerated);
    SequenceTable s = s_from_recurrence(a);
    SequenceTable published = published_simple_counts();
    CHECK(s.contiguous_through(2) == 8);
    for (int n = 2; n <= 8; ++n) {
        CHECK(s.at(n) == published.at(n));
        CHECK(s.provenance_at(n) == Provenance::recurrence);
    }
    CHECK_THROWS_AS(s_from_recurrence(SequenceTable("a")), std::domain_error);
}

TEST_CASE("recurrence verification catches corruption") {
    SequenceTable a("a");
    for (int n = 1; n <= 8; ++n)
        a.set(n, kWordCounts[n - 1], Provenance::enumerated);
    SequenceTable s = published_simple_counts();
    CHECK(verify_recurrence(a, s, 8));

    SequenceTable bad("a");
    for (int n = 1; n <= 7; ++n)
        bad.set(n, kWordCounts[n - 1], Provenance::enumerated);
    bad.set(8, 513, Provenance::enumerated);
    std::string why;
    CHECK_FALSE(verify_recurrence(bad, s, 8, &why));
    CHECK(why.find("8") != std::string::npos);
}

TEST_CASE("composition totals trace the avoider counts") {
    SequenceTable s = published_simple_counts();
    std::vector<mpz_class> t = composition_totals(s, 11);
    REQUIRE(t.size() == 12);
    CHECK(t[0] == 1);
    const long expect_a[] = {1, 2, 4, 10, 24, 66, 178, 512, 1486, 4446, 13468, 41648};
    for (int m = 0; m <= 11; ++m) CHECK(t[m] == expect_a[m]);
}

TEST_CASE("extending tables through the recurrence") {
    SequenceTable s = published_simple_counts();

    SequenceTable c("c");
    c.set(1, count_c(1), Provenance::enumerated);
    c.set(2, count_c(2), Provenance::enumerated);
    extend_c_from_s(c, s, 24);
    CHECK(c.at(13) == 41648);
    CHECK(c.at(22) == mpz_class("1702753462"));
    CHECK(c.at(23) == mpz_class("5748085332"));
    CHECK(c.at(24) == mpz_class("19506240462"));
    CHECK(c.provenance_at(1) == Provenance::enumerated);
    CHECK(c.provenance_at(24) == Provenance::recurrence);

    SequenceTable a("a");
    a.set(1, count_a(1), Provenance::enumerated);
    extend_a_from_s(a, s, 23);
    CHECK(a.at(12) == 41648);
    CHECK(a.at(23) == mpz_class("19506240462"));

    SequenceTable empty_c("c");
    CHECK_THROWS_AS(extend_c_from_s(empty_c, s, 5), std::invalid_argument);
    SequenceTable empty_a("a");
    CHECK_THROWS_AS(extend_a_from_s(empty_a, s, 5), std::invalid_argument);
}

TEST_CASE("glue product on theta images") {
    CHECK(odot(Permutation::parse("21"), Permutation::parse("1")) ==
          Permutation::parse("321"));
    CHECK(theta_inv(Permutation::parse("321")) == Permutation::parse("312"));

    Permutation outer = Permutation::parse("86421753");
    Permutation inner = Permutation::parse("7531642");
    REQUIRE(is_member_direct(theta_inv(outer)));
    REQUIRE(is_member_direct(theta_inv(inner)));
    Permutation prod = odot(outer, inner);
    CHECK(prod == Permutation::parse("15,13,11,9,8,7,5,3,1,6,4,2,14,12,10"));
    CHECK(theta_inv(prod) ==
          Permutation::parse("6,14,1,2,3,4,5,7,8,15,9,10,11,12,13"));
    CHECK(is_member_direct(theta_inv(prod)));
}

TEST_CASE("glue product rejects words outside the class") {
    CHECK_THROWS_AS(odot(Permutation::parse("12"), Permutation::parse("1")),
                    std::domain_error);
    CHECK_THROWS_AS(odot(Permutation::parse("21"), Permutation::parse("12")),
                    std::domain_error);
    // theta image of a cyclic permutation that contains 321.
    CHECK_THROWS_AS(odot(Permutation::parse("4132"), Permutation::parse("21")),
                    std::domain_error);
}

TEST_CASE("glue product transported to the members") {
    CHECK(odot_perm(Permutation::parse("21"), Permutation::parse("1")) ==
          Permutation::parse("312"));
    for (const Permutation& p : enumerate_c321(3)) {
        for (const Permutation& q : enumerate_c321(4)) {
            Permutation r = odot_perm(p, q);
            CHECK(r.size() == 7);
            CHECK(is_member_direct(r));
            CHECK(theta(r) == odot(theta(p), theta(q)));
        }
    }
}

TEST_CASE("inflation decomposition") {
    auto d = decompose_inflation(Permutation::parse("321"));
    REQUIRE(d.has_value());
    CHECK(d->skeleton == Permutation::parse("21"));
    CHECK(d->content == Permutation::parse("21"));

    d = decompose_inflation(Permutation::parse("4321"));
    REQUIRE(d.has_value());
    CHECK(d->skeleton == Permutation::parse("21"));
    CHECK(d->content == Permutation::parse("321"));

    d = decompose_inflation(Permutation::parse("2134"));
    REQUIRE(d.has_value());
    CHECK(d->skeleton == Permutation::parse("12"));
    CHECK(d->content == Permutation::parse("213"));

    CHECK_FALSE(decompose_inflation(Permutation::parse("2413")).has_value());
    CHECK_FALSE(decompose_inflation(Permutation::parse("1")).has_value());
    CHECK_FALSE(decompose_inflation(Permutation::parse("21")).has_value());

    CHECK_THROWS_AS(decompose_inflation(Permutation::parse("513426")),
                    std::domain_error);
    CHECK_THROWS_AS(decompose_inflation(Permutation::parse("231")),
                    std::domain_error);
}

TEST_CASE("every word decomposes back to itself") {
    for (const Permutation& p : enumerate_A(6)) {
        auto d = decompose_inflation(p);
        if (!d) {
            CHECK(is_simple(p));
            continue;
        }
        CHECK(is_simple(d->skeleton));
        CHECK(d->skeleton.size() >= 2);
        CHECK(d->content.size() >= 2);
        CHECK(inflate_at(d->skeleton, 1, d->content) == p);
    }
}

TEST_CASE("two-larger constructions") {
    std::vector<Permutation> from2413 = lemma_constructions(Permutation::parse("2413"));
    REQUIRE(from2413.size() == 4);
    CHECK(from2413[0] == Permutation::parse("246135"));
    CHECK(from2413[1] == Permutation::parse("531642"));
    CHECK(from2413[2] == Permutation::parse("426315"));
    CHECK(from2413[3] == Permutation::parse("513624"));
    CHECK(from2413[1] == reverse(from2413[0]));
    CHECK(from2413[3] == reverse(from2413[2]));

    std::vector<Permutation> from3142 = lemma_constructions(Permutation::parse("3142"));
    REQUIRE(from3142.size() == 4);
    CHECK(from3142[0] == Permutation::parse("314625"));
    CHECK(from3142[1] == Permutation::parse("526413"));
    CHECK(from3142[2] == Permutation::parse("413625"));
    CHECK(from3142[3] == Permutation::parse("526314"));

    for (const std::vector<Permutation>& batch : {from2413, from3142}) {
        for (const Permutation& w : batch) {
            CHECK(is_simple(w));
            CHECK(in_A(w));
        }
    }
}

TEST_CASE("constructions reject inputs off the lemma's domain") {
    CHECK_THROWS_AS(lemma_constructions(Permutation::parse("21")), std::domain_error);
    CHECK_THROWS_AS(lemma_constructions(Permutation::parse("123")), std::domain_error);
    // Simple but outside the word class.
    CHECK_THROWS_AS(lemma_constructions(Permutation::parse("24153")), std::domain_error);
}
