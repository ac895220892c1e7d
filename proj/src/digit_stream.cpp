#include "cantor/digit_stream.hpp"

#include <cmath>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

DigitStream DigitStream::seeded(std::size_t base, std::vector<Digit> alphabet, std::uint64_t seed) {
    if (base < 2) {
        throw error(errc::out_of_range, "stream base must be at least 2");
    }
    if (alphabet.empty()) {
        throw error(errc::invalid_data, "stream alphabet is empty");
    }
    for (Digit d : alphabet) {
        if (d >= base) {
            throw error(errc::invalid_data, "alphabet digit " + std::to_string(d) + " out of range for base " +
                                                std::to_string(base));
        }
    }
    DigitStream s;
    s.base_ = base;
    s.alphabet_ = std::move(alphabet);
    s.engine_.seed(seed);
    return s;
}

DigitStream DigitStream::from_function(std::size_t base, Generator fn) {
    if (base < 2) {
        throw error(errc::out_of_range, "stream base must be at least 2");
    }
    DigitStream s;
    s.base_ = base;
    s.generator_ = std::move(fn);
    return s;
}

DigitStream DigitStream::from_expansion(const PeriodicExpansion& e) {
    if (e.period.empty()) {
        throw error(errc::invalid_data, "expansion period must be nonempty");
    }
    return from_function(e.base, [pre = e.preperiod, per = e.period](std::size_t i) -> Digit {
        if (i < pre.size()) return pre[i];
        return per[(i - pre.size()) % per.size()];
    });
}

void DigitStream::fill_to(std::size_t length) {
    while (cache_.size() < length) {
        Digit d;
        if (generator_) {
            d = generator_(cache_.size());
            if (d >= base_) {
                throw error(errc::invalid_data, "stream generator produced digit " + std::to_string(d));
            }
        } else {
            d = alphabet_[engine_() % alphabet_.size()];
        }
        cache_.push_back(d);
    }
}

Digit DigitStream::digit(std::size_t index) {
    fill_to(index + 1);
    return cache_[index];
}

std::span<const Digit> DigitStream::prefix(std::size_t length) {
    fill_to(length);
    return {cache_.data(), length};
}

Rational DigitStream::prefix_value(std::size_t length) {
    fill_to(length);
    BigInt num = 0;
    const unsigned long n = static_cast<unsigned long>(base_);
    for (std::size_t i = 0; i < length; ++i) {
        num = num * n + cache_[i];
    }
    return Rational(num, big_pow(base_, length));
}

BaseConverter::BaseConverter(DigitStream& source, std::size_t target_base, std::size_t fetch_budget)
    : source_(&source), target_(target_base), budget_(fetch_budget) {
    if (target_base < 2) {
        throw error(errc::out_of_range, "target base must be at least 2");
    }
}

std::optional<Digit> BaseConverter::next() {
    const std::size_t source_base = source_->base();
    if (source_base == target_) {
        if (consumed_ >= budget_) return std::nullopt;
        return source_->digit(consumed_++);
    }
    const unsigned long m = static_cast<unsigned long>(target_);
    BigInt e;
    for (;;) {
        // The interval [lo, lo + width] / den fixes the next digit once its
        // image under y -> M y lies inside a single unit cell.
        BigInt scaled = lo_ * m;
        mpz_fdiv_q(e.get_mpz_t(), scaled.get_mpz_t(), den_.get_mpz_t());
        if ((lo_ + width_) * m < (e + 1) * den_) {
            lo_ = scaled - e * den_;
            width_ *= m;
            return static_cast<Digit>(e.get_ui());
        }
        if (consumed_ >= budget_) {
            return std::nullopt;
        }
        const Digit c = source_->digit(consumed_++);
        lo_ = lo_ * static_cast<unsigned long>(source_base) + width_ * c;
        den_ *= static_cast<unsigned long>(source_base);
    }
}

std::size_t default_fetch_budget(std::size_t source_base, std::size_t target_base, std::size_t count) {
    if (source_base == target_base) {
        return count;
    }
    const double ratio = std::log(static_cast<double>(target_base)) / std::log(static_cast<double>(source_base));
    return static_cast<std::size_t>(std::ceil(static_cast<double>(count) * ratio)) + 64;
}

std::vector<Digit> convert_digits(DigitStream& source, std::size_t target_base, std::size_t count,
                                  std::size_t fetch_budget) {
    if (source.base() == target_base) {
        if (count > fetch_budget) {
            throw error(errc::insufficient_prefix, "requested more digits than the fetch budget allows");
        }
        const auto p = source.prefix(count);
        return {p.begin(), p.end()};
    }
    BaseConverter conv(source, target_base, fetch_budget);
    std::vector<Digit> out;
    out.reserve(count);
    while (out.size() < count) {
        const auto d = conv.next();
        if (!d) {
            throw error(errc::insufficient_prefix, "could not certify base-" + std::to_string(target_base) +
                                                       " digit " + std::to_string(out.size() + 1) + " within " +
                                                       std::to_string(fetch_budget) + " source digits");
        }
        out.push_back(*d);
    }
    return out;
}

}  // namespace cantor
