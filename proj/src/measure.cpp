#include "cantor/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <thread>

#include "cantor/cdf.hpp"
#include "cantor/errors.hpp"

namespace cantor {
namespace {

DigitStream mu_stream(const DigitVector& v, std::uint64_t seed) {
    std::vector<Digit> alphabet;
    for (std::size_t d : v.digit_set().digits) alphabet.push_back(static_cast<Digit>(d));
    return DigitStream::seeded(v.base(), std::move(alphabet), seed);
}

// r / mod in [0, 1) as a double, via a 53-bit integer quotient.
double fraction(const BigInt& r, const BigInt& mod) {
    BigInt scaled = r;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 53);
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), mod.get_mpz_t());
    return std::ldexp(q.get_d(), -53);
}

double orbit_sum(BigInt r, const BigInt& mod, std::size_t m, std::size_t length) {
    std::complex<double> sum = 0.0;
    const unsigned long mult = static_cast<unsigned long>(m);
    for (std::size_t n = 0; n < length; ++n) {
        sum += std::polar(1.0, 2.0 * std::numbers::pi * fraction(r, mod));
        r *= mult;
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    }
    return std::abs(sum);
}

// Runs fn(i) for i in [0, count) across `jobs` threads, each owning a
// contiguous slice, and returns the per-slice results in slice order.
template <typename Result, typename Fn>
std::vector<Result> parallel_slices(std::size_t count, unsigned jobs, Fn fn) {
    const std::size_t slices = std::max<std::size_t>(1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, count));
    std::vector<Result> results(slices);
    std::vector<std::exception_ptr> failures(slices);
    auto run = [&](std::size_t s) {
        try {
            const std::size_t begin = count * s / slices;
            const std::size_t end = count * (s + 1) / slices;
            for (std::size_t i = begin; i < end; ++i) fn(results[s], i);
        } catch (...) {
            failures[s] = std::current_exception();
        }
    };
    if (slices == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (std::size_t s = 0; s < slices; ++s) threads.emplace_back(run, s);
        for (auto& t : threads) t.join();
    }
    for (auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }
    return results;
}

}  // namespace

std::vector<DigitStream> sample_mu(const MuSampler& sampler, std::size_t count, std::size_t depth) {
    std::vector<DigitStream> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(mu_stream(sampler.vector, sampler.seed + i));
        out.back().prefix(depth);
    }
    return out;
}

double FrequencyReport::frequency(std::size_t digit) const {
    if (total == 0 || digit >= counts.size()) return 0.0;
    return static_cast<double>(counts[digit]) / static_cast<double>(total);
}

void FrequencyReport::add(const FrequencyReport& other) {
    if (counts.empty()) {
        base = other.base;
        counts.assign(other.counts.size(), 0);
    }
    if (other.base != base) {
        throw error(errc::invalid_data, "cannot merge frequency reports of different bases");
    }
    for (std::size_t d = 0; d < counts.size(); ++d) counts[d] += other.counts[d];
    total += other.total;
    max_deviation = 0.0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
        max_deviation = std::max(max_deviation, std::abs(frequency(d) - 1.0 / static_cast<double>(base)));
    }
}

FrequencyReport digit_frequency(DigitStream& x, std::size_t target_base, std::size_t count) {
    if (target_base < 2) {
        throw error(errc::out_of_range, "target base must be at least 2");
    }
    const auto digits = convert_digits(x, target_base, count, default_fetch_budget(x.base(), target_base, count));
    FrequencyReport partial{target_base, std::vector<std::size_t>(target_base, 0), 0, 0.0};
    for (Digit d : digits) ++partial.counts[d];
    partial.total = digits.size();
    FrequencyReport out{target_base, {}, 0, 0.0};
    out.add(partial);
    return out;
}

FrequencyReport aggregate_frequency(const DigitVector& v, std::size_t target_base, std::size_t digits,
                                    std::size_t samples, std::uint64_t seed, unsigned jobs) {
    auto parts = parallel_slices<FrequencyReport>(samples, jobs, [&](FrequencyReport& acc, std::size_t i) {
        DigitStream s = mu_stream(v, seed + i);
        acc.add(digit_frequency(s, target_base, digits));
    });
    FrequencyReport out{target_base, std::vector<std::size_t>(target_base, 0), 0, 0.0};
    for (const auto& p : parts) {
        if (p.total > 0) out.add(p);
    }
    return out;
}

std::size_t weyl_required_depth(std::size_t stream_base, std::size_t m, std::size_t h, std::size_t length) {
    if (length == 0) return 1;
    BigInt need = BigInt(1000) * static_cast<unsigned long>(h) * big_pow(m, length - 1);
    BigInt reach = 1;
    std::size_t depth = 0;
    while (reach <= need) {
        reach *= static_cast<unsigned long>(stream_base);
        ++depth;
    }
    return std::max<std::size_t>(depth, 1);
}

double weyl_sum(DigitStream& x, std::size_t m, std::size_t h, std::size_t length, std::size_t depth) {
    const std::size_t need = weyl_required_depth(x.base(), m, h, length);
    if (depth < need) {
        throw error(errc::insufficient_prefix, "Weyl sum with L = " + std::to_string(length) + " needs " +
                                                   std::to_string(need) + " digits, got " + std::to_string(depth));
    }
    const BigInt mod = big_pow(x.base(), depth);
    const Rational p = x.prefix_value(depth);
    BigInt r = p.numerator() * (mod / p.denominator()) * static_cast<unsigned long>(h);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return orbit_sum(r, mod, m, length);
}

double weyl_sum(const Rational& x, std::size_t m, std::size_t h, std::size_t length) {
    const BigInt mod = x.denominator();
    BigInt r = x.numerator() * static_cast<unsigned long>(h);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return orbit_sum(r, mod, m, length);
}

double weyl_median_ratio(const DigitVector& v, std::size_t m, std::size_t h, std::size_t length,
                         std::size_t samples, std::uint64_t seed) {
    if (samples == 0 || length == 0) {
        throw error(errc::out_of_range, "need at least one sample and L >= 1");
    }
    const std::size_t depth = weyl_required_depth(v.base(), m, h, length);
    std::vector<double> ratios;
    ratios.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        DigitStream s = mu_stream(v, seed + i);
        ratios.push_back(weyl_sum(s, m, h, length, depth) / static_cast<double>(length));
    }
    std::sort(ratios.begin(), ratios.end());
    const std::size_t mid = samples / 2;
    return samples % 2 == 1 ? ratios[mid] : 0.5 * (ratios[mid - 1] + ratios[mid]);
}

CharacterBound character_bound(const DigitSet& digits, std::size_t t, std::size_t j) {
    if (digits.digits.size() < 2) {
        throw error(errc::invalid_data, "the character bound needs at least two digits");
    }
    const BigInt mod = big_pow(digits.base, j);
    auto phase = [&](std::size_t value) {
        BigInt r = BigInt(static_cast<unsigned long>(t)) * static_cast<unsigned long>(value);
        mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
        return fraction(r, mod);
    };
    std::complex<double> sum = 0.0;
    for (std::size_t e : digits.digits) sum += std::polar(1.0, 2.0 * std::numbers::pi * phase(e));
    const double average = std::abs(sum) / static_cast<double>(digits.digits.size());
    double cosine = 0.0;
    for (std::size_t a = 0; a < digits.digits.size(); ++a) {
        for (std::size_t b = a + 1; b < digits.digits.size(); ++b) {
            const std::size_t gap = digits.digits[b] - digits.digits[a];
            cosine = std::max(cosine, std::abs(std::cos(std::numbers::pi * phase(gap))));
        }
    }
    return {average, cosine, average <= cosine + 1e-12};
}

bool character_bound_check(const DigitSet& digits, std::size_t t, std::size_t j) {
    return character_bound(digits, t, j).holds;
}

double intersection_rate(const DigitVector& a, const DigitVector& b, std::size_t count, std::size_t depth,
                         std::uint64_t seed, unsigned jobs) {
    if (count == 0) {
        throw error(errc::out_of_range, "need at least one sample");
    }
    auto hits = parallel_slices<std::size_t>(count, jobs, [&](std::size_t& acc, std::size_t i) {
        DigitStream s = mu_stream(a, seed + i);
        if (std::holds_alternative<IrrationalAtDepth>(classify(b, s, depth))) ++acc;
    });
    std::size_t total = 0;
    for (auto h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(count);
}

double empirical_cdf_distance(const DigitVector& v, std::size_t count, std::size_t depth, std::uint64_t seed,
                              const std::vector<Rational>& probes) {
    if (count == 0) {
        throw error(errc::out_of_range, "need at least one sample");
    }
    std::vector<Rational> values;
    values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        DigitStream s = mu_stream(v, seed + i);
        values.push_back(s.prefix_value(depth));
    }
    std::sort(values.begin(), values.end());
    double worst = 0.0;
    for (const auto& p : probes) {
        const auto below = std::upper_bound(values.begin(), values.end(), p) - values.begin();
        const double empirical = static_cast<double>(below) / static_cast<double>(count);
        worst = std::max(worst, std::abs(empirical - eval(v, p).to_double()));
    }
    return worst;
}

}  // namespace cantor
