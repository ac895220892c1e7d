#include <random>

#include "cantor/limits.hpp"
#include "support.hpp"

using namespace cantor;

TEST_CASE("validation") {
    CHECK(V("101").weight() == 2);
    CHECK(V("1101").base() == 4);
    CHECK_ERRC(V("11"), errc::degenerate_vector);
    CHECK_ERRC(V("111"), errc::degenerate_vector);
    CHECK_ERRC(V("1000"), errc::degenerate_vector);
    CHECK_ERRC(V("10a"), errc::parse_error);
    const std::vector<std::uint8_t> bits{1, 0, 1};
    CHECK_ERRC(DigitVector::validate(4, bits), errc::length_mismatch);
    const std::vector<std::uint8_t> twos{1, 2, 0};
    CHECK_ERRC(DigitVector::validate(3, twos), errc::invalid_data);
    const std::vector<std::size_t> digits{0, 3};
    CHECK(DigitVector::from_digits(4, digits) == V("1001"));
    const std::vector<std::size_t> bad{0, 4};
    CHECK_ERRC(DigitVector::from_digits(4, bad), errc::index_out_of_range);
}

TEST_CASE("cumulative digit function") {
    const auto v = V("1101");
    CHECK(v.cumulative(0) == 0);
    CHECK(v.cumulative(2) == 2);
    CHECK(v.cumulative(3) == 2);
    CHECK(v.cumulative(4) == 3);
    CHECK_ERRC(v.cumulative(5), errc::index_out_of_range);
    const std::vector<long long> g{0, 1, 2, 2, 3};
    CHECK(vector_from_cumulative(g) == v);
    const std::vector<long long> jump{0, 2, 2, 2, 3};
    CHECK_ERRC(vector_from_cumulative(jump), errc::invalid_cumulative);
    const std::vector<long long> start{1, 1, 2, 2, 3};
    CHECK_ERRC(vector_from_cumulative(start), errc::invalid_cumulative);
    const std::vector<long long> full{0, 1, 2, 3};
    CHECK_ERRC(vector_from_cumulative(full), errc::invalid_cumulative);
}

TEST_CASE("digit sets") {
    const auto d = V("1101").digit_set();
    CHECK(d.digits == std::vector<std::size_t>{0, 1, 3});
    CHECK(d.contains(3));
    CHECK_FALSE(d.contains(2));
    CHECK(d.to_vector() == V("1101"));
}

TEST_CASE("Kronecker products match the digit-set composition") {
    CHECK(kronecker(V("101"), V("101")) == V("101000101"));
    CHECK(kronecker(V("101"), V("011")) == V("011000011"));
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const auto b = oracle::random_bits(rng, 3 + rng() % 6);
        const auto c = oracle::random_bits(rng, 3 + rng() % 6);
        CHECK(to_bits(kronecker(from_bits(b), from_bits(c))) == oracle::kronecker_by_digits(b, c));
    }
}

TEST_CASE("powers and the length cap") {
    CHECK(power(V("101"), 1) == V("101"));
    CHECK(power(V("101"), 2) == V("101000101"));
    CHECK(power(V("101"), 3).base() == 27);
    CHECK_ERRC(power(V("101"), 0), errc::out_of_range);
    const std::size_t saved = max_bits();
    set_max_bits(100);
    CHECK_ERRC(power(V("101"), 5), errc::resource_limit);
    CHECK(power(V("101"), 4).base() == 81);
    set_max_bits(saved);
}

TEST_CASE("reverse") {
    CHECK(reverse(V("1101")) == V("1011"));
    CHECK(reverse(reverse(V("110100"))) == V("110100"));
}

TEST_CASE("canonical roots agree with exhaustive search") {
    CHECK(canonical_root(V("101000101")) == V("101"));
    CHECK(canonical_root(V("110000000")) == V("110000000"));
    CHECK(canonical_root(V("1101")) == V("1101"));
    CHECK(canonical_root(power(V("1101"), 2)) == V("1101"));
    // Base 16 = 4^2 = 2^4: compare with brute force over every base-4 root.
    for (const auto& v : enumerate_vectors(16)) {
        DigitVector expected = v;
        for (const auto& r : enumerate_vectors(4)) {
            if (power(r, 2) == v) expected = r;
        }
        CHECK(canonical_root(v) == expected);
    }
}

TEST_CASE("equivalence") {
    CHECK(equivalent(V("101"), V("101000101")));
    CHECK_FALSE(equivalent(V("101"), V("110000101")));
    CHECK_FALSE(equivalent(V("101"), V("1001")));
    CHECK_FALSE(equivalent(V("101"), V("110")));
    const auto w = equivalence_witness(power(V("1101"), 3), power(V("1101"), 2));
    REQUIRE(w.has_value());
    CHECK(w->common_base == 2);
    CHECK(w->lifted_vector == power(V("1101"), 6));
    CHECK_FALSE(equivalence_witness(V("101"), V("1101")).has_value());
}

TEST_CASE("enumeration counts") {
    std::size_t total = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const auto vs = enumerate_vectors(n);
        CHECK(vs.size() == (std::size_t{1} << n) - n - 2);
        CHECK(std::is_sorted(vs.begin(), vs.end()));
        total += vs.size();
    }
    CHECK(total == 459);
    CHECK(enumerate_vectors(9).size() == 501);
}
