#include "cantor/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "cantor/cdf.hpp"
#include "cantor/dependence.hpp"
#include "cantor/digit_vector.hpp"
#include "cantor/errors.hpp"
#include "cantor/expansion.hpp"
#include "cantor/interpolation.hpp"
#include "cantor/limits.hpp"
#include "cantor/measure.hpp"
#include "cantor/reconstruction.hpp"

namespace cantor {
namespace {

using Check = std::function<CheckResult()>;

std::vector<DigitVector> vectors_up_to(std::size_t max_base) {
    std::vector<DigitVector> out;
    for (std::size_t n = 3; n <= max_base; ++n) {
        auto vs = enumerate_vectors(n);
        std::move(vs.begin(), vs.end(), std::back_inserter(out));
    }
    return out;
}

Rational random_unit(std::mt19937_64& rng, long long max_den) {
    const long long den = std::uniform_int_distribution<long long>(1, max_den)(rng);
    const long long num = std::uniform_int_distribution<long long>(0, den)(rng);
    return Rational(num, den);
}

CheckResult result(std::string name, std::size_t failures, std::size_t cases) {
    std::ostringstream detail;
    detail << cases << " cases";
    if (failures > 0) detail << ", " << failures << " failed";
    return {std::move(name), failures == 0, detail.str()};
}

// Sweeps `fn` over all vectors of base <= max_base with `per_vector` random
// rationals each, counting failures.
CheckResult vector_sweep(std::string name, std::size_t max_base, std::size_t per_vector, std::uint64_t seed,
                         const std::function<bool(const DigitVector&, const Rational&)>& fn) {
    std::mt19937_64 rng(seed);
    std::size_t failures = 0;
    std::size_t cases = 0;
    for (const auto& v : vectors_up_to(max_base)) {
        for (std::size_t i = 0; i < per_vector; ++i) {
            ++cases;
            if (!fn(v, random_unit(rng, 10000))) ++failures;
        }
    }
    return result(std::move(name), failures, cases);
}

std::vector<Check> algebra_checks() {
    return {
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(8)) {
                ++cases;
                std::vector<long long> g;
                for (std::size_t k = 0; k <= v.base(); ++k) g.push_back(static_cast<long long>(v.cumulative(k)));
                if (!(vector_from_cumulative(g) == v)) ++failures;
            }
            return result("g-table round trip", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            const auto small = vectors_up_to(5);
            for (const auto& b : small) {
                for (const auto& c : small) {
                    ++cases;
                    const DigitVector bc = kronecker(b, c);
                    const std::size_t nc = c.base();
                    bool ok = true;
                    for (std::size_t m = 0; m < b.base() && ok; ++m) {
                        for (std::size_t n = 0; n <= nc && ok; ++n) {
                            ok = bc.cumulative(n + m * nc) == b.cumulative(m) * c.weight() + (b.bit(m) ? c.cumulative(n) : 0);
                        }
                    }
                    if (!ok) ++failures;
                }
            }
            return result("Kronecker g-table identity", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(5)) {
                for (std::size_t k = 1; k <= 3; ++k) {
                    ++cases;
                    const DigitVector p = power(v, k);
                    const DigitVector root = canonical_root(p);
                    const bool ok = root == canonical_root(v) && canonical_root(root) == root && equivalent(root, p);
                    if (!ok) ++failures;
                }
            }
            return result("canonical root of powers", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& a : enumerate_vectors(3)) {
                for (const auto& b : enumerate_vectors(9)) {
                    ++cases;
                    if (equivalent(a, b) != (canonical_root(b) == a)) ++failures;
                }
            }
            return result("equivalence matches canonical roots (3 vs 9)", failures, cases);
        },
        [] {
            std::mt19937_64 rng(11);
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (std::size_t base = 2; base <= 12; ++base) {
                for (int i = 0; i < 200; ++i) {
                    Rational x = random_unit(rng, 5000);
                    if (x == Rational(1)) continue;
                    ++cases;
                    if (from_expansion(to_expansion(x, base)) != x) ++failures;
                    if (auto alt = alternate_expansion(x, base); alt && from_expansion(*alt) != x) ++failures;
                }
            }
            return result("expansion round trip", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (std::uint64_t r = 2; r <= 64; ++r) {
                for (std::uint64_t s = 2; s <= 64; ++s) {
                    ++cases;
                    bool brute = false;
                    for (unsigned m = 1; m <= 6 && !brute; ++m) {
                        for (unsigned n = 1; n <= 6 && !brute; ++n) {
                            brute = big_pow(r, m) == big_pow(s, n);
                        }
                    }
                    if (brute != multiplicatively_dependent(r, s)) ++failures;
                }
            }
            return result("dependence matches brute force", failures, cases);
        },
    };
}

std::vector<Check> cdf_checks() {
    return {
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(8)) {
                for (std::size_t k = 0; k <= v.base(); ++k) {
                    ++cases;
                    const Rational expected(static_cast<long long>(v.cumulative(k)), static_cast<long long>(v.weight()));
                    if (eval(v, Rational(static_cast<long long>(k), static_cast<long long>(v.base()))) != expected) {
                        ++failures;
                    }
                }
            }
            return result("fixed points F(k/N) = g(k)/W", failures, cases);
        },
        [] { return vector_sweep("invariance equation", 8, 100, 21, check_invariance); },
        [] {
            return vector_sweep("Kronecker square leaves F unchanged", 8, 100, 22, [](const DigitVector& v, const Rational& x) {
                return eval(v, x) == eval(power(v, 2), x);
            });
        },
        [] {
            return vector_sweep("reversal identity", 8, 100, 23, [](const DigitVector& v, const Rational& x) {
                return eval(reverse(v), x) + eval(v, Rational(1) - x) == Rational(1);
            });
        },
        [] {
            std::mt19937_64 rng(24);
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(6)) {
                for (int i = 0; i < 50; ++i) {
                    Rational a = random_unit(rng, 1000);
                    Rational b = random_unit(rng, 1000);
                    if (b < a) std::swap(a, b);
                    ++cases;
                    if (eval(v, b) < eval(v, a)) ++failures;
                }
            }
            return result("monotonicity", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(6)) {
                for (std::size_t level = 1; level <= 3; ++level) {
                    const std::size_t cells = checked_pow(v.base(), level, max_bits());
                    const Rational mass(BigInt(1), big_pow(v.weight(), level));
                    for (std::size_t k = 0; k < cells; ++k) {
                        // Cell k is kept iff all of its base-N digits are kept.
                        bool kept = true;
                        for (std::size_t rest = k, i = 0; i < level; ++i, rest /= v.base()) {
                            kept = kept && v.bit(rest % v.base());
                        }
                        if (!kept) continue;
                        ++cases;
                        const Rational lo(static_cast<long long>(k), static_cast<long long>(cells));
                        const Rational hi(static_cast<long long>(k + 1), static_cast<long long>(cells));
                        if (eval(v, hi) - eval(v, lo) != mass) ++failures;
                    }
                }
            }
            return result("kept cells carry mass W^-n", failures, cases);
        },
    };
}

std::vector<DataPoint> random_dataset(std::mt19937_64& rng) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    std::vector<Rational> xs;
    while (xs.size() < k) {
        const long long den = std::uniform_int_distribution<long long>(2, 12)(rng);
        const Rational x(std::uniform_int_distribution<long long>(1, den - 1)(rng), den);
        if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
    }
    std::vector<Rational> ys;
    for (std::size_t i = 0; i < k; ++i) {
        const long long den = std::uniform_int_distribution<long long>(2, 12)(rng);
        ys.emplace_back(std::uniform_int_distribution<long long>(1, den - 1)(rng), den);
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    std::vector<DataPoint> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back({xs[i], ys[i]});
    return out;
}

std::vector<Check> interpolation_checks() {
    return {[] {
        std::mt19937_64 rng(31);
        std::size_t exact_fail = 0;
        std::size_t unique_fail = 0;
        std::size_t bound_fail = 0;
        const std::size_t datasets = 500;
        for (std::size_t d = 0; d < datasets; ++d) {
            const auto points = random_dataset(rng);
            const NormalizedData norm = normalize(points);
            const DigitVector v = build_interpolant(norm);
            const DigitVector w = interpolate_at_scale(points, 2 * norm.scale);
            bool exact = true;
            bool agree = !(v == w);
            for (const auto& p : points) {
                exact = exact && eval(v, p.x) == p.y;
                agree = agree && eval(w, p.x) == p.y;
            }
            if (!exact) ++exact_fail;
            if (!agree) ++unique_fail;
            const Rational bound = max_error(points);
            for (int i = 0; i < 100; ++i) {
                const Rational x = random_unit(rng, 1000);
                Rational diff = eval(v, x) - eval(w, x);
                if (diff.sign() < 0) diff = -diff;
                if (diff > bound) {
                    ++bound_fail;
                    break;
                }
            }
        }
        return result("interpolants exact, non-unique, within max_error", exact_fail + unique_fail + bound_fail,
                      datasets);
    }};
}

std::vector<Check> reconstruction_checks() {
    return {
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(10)) {
                ++cases;
                CdfOracle oracle = CdfOracle::hidden(v);
                if (!(reconstruct_known_n(oracle, v.base()) == v) || oracle.total_queries() != v.base() - 1) {
                    ++failures;
                }
            }
            return result("known-N round trip with N-1 queries", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(12)) {
                ++cases;
                CdfOracle oracle = CdfOracle::hidden(v);
                if (!(conditional_reconstruct(oracle, v.base()) == v) || oracle.total_queries() > v.base() / 2) {
                    ++failures;
                }
            }
            return result("conditional round trip within floor(N/2) queries", failures, cases);
        },
        [] {
            std::mt19937_64 rng(41);
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (std::size_t n = 4; n <= 10; ++n) {
                for (int trial = 0; trial < 50; ++trial) {
                    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n / 2 - 1)(rng);
                    std::vector<Rational> points;
                    for (std::size_t i = 0; i < k; ++i) points.push_back(random_unit(rng, 100));
                    ++cases;
                    const auto [b, c] = indistinguishable_pair(n, points);
                    bool ok = !(b == c);
                    for (const auto& x : points) ok = ok && eval(b, x) == eval(c, x);
                    if (!ok) ++failures;
                }
            }
            return result("fewer than floor(N/2) fixed points cannot separate", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& a : enumerate_vectors(3)) {
                for (const auto& b : enumerate_vectors(9)) {
                    ++cases;
                    if (depfix_check(a, b) != equivalent(a, b)) ++failures;
                }
            }
            return result("grid agreement matches equivalence (3 vs 9)", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (const auto& v : vectors_up_to(5)) {
                ++cases;
                CdfOracle oracle = CdfOracle::hidden(v);
                const auto rec = reconstruct_bounded_k(oracle, 5, default_classify_depth, 2024);
                if (!(rec.vector == canonical_root(v)) || oracle.rational_queries() > 75 ||
                    oracle.stream_queries() > 19) {
                    ++failures;
                }
            }
            return result("bounded-K recovery at K = 5", failures, cases);
        },
        [] {
            std::size_t failures = 0;
            for (std::size_t k = 3; k <= 5; ++k) {
                if (!verify_uniqueness(k, bruteforce_distinguishing_set(k))) ++failures;
            }
            return result("greedy uniqueness sets verify", failures, 3);
        },
    };
}

std::vector<Check> measure_checks() {
    return {
        [] {
            std::size_t failures = 0;
            std::size_t cases = 0;
            for (std::size_t n = 2; n <= 6; ++n) {
                for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                    DigitSet d{n, {}};
                    for (std::size_t i = 0; i < n; ++i) {
                        if (mask & (1U << i)) d.digits.push_back(i);
                    }
                    if (d.digits.size() < 2) continue;
                    for (std::size_t t = 1; t <= 50; ++t) {
                        for (std::size_t j = 0; j <= 4; ++j) {
                            ++cases;
                            if (!character_bound_check(d, t, j)) ++failures;
                        }
                    }
                }
            }
            return result("character-sum cosine bound", failures, cases);
        },
        [] {
            const auto report = aggregate_frequency(DigitVector::from_bit_string("101"), 2, 512, 2000, 7);
            const double f = report.frequency(1);
            std::ostringstream detail;
            detail << "digit-1 frequency " << std::fixed << std::setprecision(4) << f;
            return CheckResult{"base-2 normality of mu samples", f >= 0.49 && f <= 0.51, detail.str()};
        },
        [] {
            const double rate = intersection_rate(DigitVector::from_bit_string("101"), DigitVector::from_bit_string("1001"),
                                                  1000, 100, 7);
            std::ostringstream detail;
            detail << "unrefuted fraction " << rate;
            return CheckResult{"independent Cantor sets barely meet", rate <= 0.001, detail.str()};
        },
        [] {
            std::vector<Rational> probes;
            for (long long k = 1; k < 10; ++k) probes.emplace_back(k, 10);
            const double ks = empirical_cdf_distance(DigitVector::from_bit_string("101"), 10000, 20, 7, probes);
            std::ostringstream detail;
            detail << "KS distance " << std::fixed << std::setprecision(4) << ks;
            return CheckResult{"empirical CDF of mu samples", ks <= 0.03, detail.str()};
        },
        [] {
            const DigitVector v = DigitVector::from_bit_string("101");
            const double small = weyl_median_ratio(v, 2, 1, 64, 50, 7);
            const double large = weyl_median_ratio(v, 2, 1, 4096, 50, 7);
            std::ostringstream detail;
            detail << std::fixed << std::setprecision(4) << "L=64: " << small << ", L=4096: " << large;
            return CheckResult{"Weyl median ratio decreases", large < small, detail.str()};
        },
    };
}

std::vector<Check> checks_for(std::string_view suite) {
    if (suite == "algebra") return algebra_checks();
    if (suite == "cdf") return cdf_checks();
    if (suite == "interpolation") return interpolation_checks();
    if (suite == "reconstruction") return reconstruction_checks();
    if (suite == "measure") return measure_checks();
    std::vector<Check> all;
    for (auto name : {"algebra", "cdf", "interpolation", "reconstruction", "measure"}) {
        auto part = checks_for(name);
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
}

CheckResult guarded(const Check& check) {
    try {
        return check();
    } catch (const std::exception& e) {
        return {"(check raised)", false, e.what()};
    }
}

}  // namespace

bool is_known_suite(std::string_view suite) {
    return suite == "algebra" || suite == "cdf" || suite == "interpolation" || suite == "reconstruction" ||
           suite == "measure" || suite == "all";
}

std::vector<CheckResult> run_suite(std::string_view suite, unsigned jobs) {
    if (!is_known_suite(suite)) {
        throw error(errc::invalid_data, "unknown suite '" + std::string(suite) + "'");
    }
    const auto checks = checks_for(suite);
    std::vector<CheckResult> out;
    out.reserve(checks.size());
    const std::size_t width = std::max(1U, jobs);
    for (std::size_t start = 0; start < checks.size(); start += width) {
        std::vector<std::future<CheckResult>> batch;
        for (std::size_t i = start; i < std::min(checks.size(), start + width); ++i) {
            batch.push_back(std::async(width == 1 ? std::launch::deferred : std::launch::async, guarded,
                                       std::cref(checks[i])));
        }
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

void print_results(std::ostream& out, const std::vector<CheckResult>& results) {
    std::size_t name_width = 0;
    for (const auto& r : results) name_width = std::max(name_width, r.name.size());
    for (const auto& r : results) {
        out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(name_width)) << r.name
            << "  " << r.detail << '\n';
    }
    const auto passed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
    out << passed << "/" << results.size() << " checks passed\n";
}

}  // namespace cantor
