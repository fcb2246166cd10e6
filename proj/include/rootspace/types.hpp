/*
 * Copyright 2026 The rootspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace rootspace {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

inline void require_all_finite(const std::vector<Complex>& zs, const char* what) {
    for (const Complex& z : zs) {
        if (!is_finite(z)) {
            throw std::invalid_argument(std::string(what) + ": entries must be finite");
        }
    }
}

inline void require_size_at_least(std::size_t n, std::size_t min, const char* what) {
    if (n < min) {
        throw std::invalid_argument(std::string(what) + ": need at least " +
                                    std::to_string(min) + " entries");
    }
}

// Total order on C by (re, im); used for exact multiset equality.
inline bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace detail

/// Monic complex polynomial z^n + a_{n-1} z^{n-1} + ... + a_0 of degree n >= 2,
/// stored by its n non-leading coefficients (a_0, ..., a_{n-1}).
class MonicPolynomial {
public:
    explicit MonicPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
        detail::require_size_at_least(coeffs_.size(), 2, "MonicPolynomial");
        detail::require_all_finite(coeffs_, "MonicPolynomial");
    }

    std::size_t degree() const { return coeffs_.size(); }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(std::size_t j) const { return coeffs_.at(j); }

    double max_coeff_modulus() const {
        double m = 0.0;
        for (const Complex& a : coeffs_) m = std::max(m, std::abs(a));
        return m;
    }

    /// Horner evaluation including the implicit leading 1.
    Complex evaluate(Complex z) const {
        Complex b{1.0, 0.0};
        for (std::size_t j = coeffs_.size(); j-- > 0;) b = b * z + coeffs_[j];
        return b;
    }

    /// Evaluates p(z) and p'(z) in one pass.
    void evaluate_with_derivative(Complex z, Complex& value, Complex& derivative) const {
        Complex b{1.0, 0.0};
        Complex d{0.0, 0.0};
        for (std::size_t j = coeffs_.size(); j-- > 0;) {
            d = d * z + b;
            b = b * z + coeffs_[j];
        }
        value = b;
        derivative = d;
    }

    bool operator==(const MonicPolynomial& other) const { return coeffs_ == other.coeffs_; }

private:
    std::vector<Complex> coeffs_;
};

/// Unordered collection of exactly n >= 2 complex numbers with multiplicity.
/// Storage order carries no meaning; operations on multisets are order-invariant.
class RootMultiset {
public:
    explicit RootMultiset(std::vector<Complex> elems) : elems_(std::move(elems)) {
        detail::require_size_at_least(elems_.size(), 2, "RootMultiset");
        detail::require_all_finite(elems_, "RootMultiset");
    }

    std::size_t size() const { return elems_.size(); }
    const std::vector<Complex>& elems() const { return elems_; }

    double max_modulus() const {
        double m = 0.0;
        for (const Complex& z : elems_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Elements sorted by (re, im); the canonical form used for exact equality.
    std::vector<Complex> sorted_elems() const;

    /// Exact multiset equality: equal element lists after sorting by (re, im).
    bool same_multiset(const RootMultiset& other) const {
        return size() == other.size() && sorted_elems() == other.sorted_elems();
    }

private:
    std::vector<Complex> elems_;
};

/// Ordered n-tuple of complex numbers, n >= 2. Order is meaningful.
class ComplexTuple {
public:
    explicit ComplexTuple(std::vector<Complex> entries) : entries_(std::move(entries)) {
        detail::require_size_at_least(entries_.size(), 2, "ComplexTuple");
        detail::require_all_finite(entries_, "ComplexTuple");
    }

    std::size_t size() const { return entries_.size(); }
    const std::vector<Complex>& entries() const { return entries_; }
    Complex operator[](std::size_t j) const { return entries_.at(j); }

    double max_modulus() const {
        double m = 0.0;
        for (const Complex& z : entries_) m = std::max(m, std::abs(z));
        return m;
    }

    bool operator==(const ComplexTuple& other) const { return entries_ == other.entries_; }

private:
    std::vector<Complex> entries_;
};

/// Result of a bottleneck matching between two equal-size multisets:
/// the matching cost (max matched distance, minimized over permutations)
/// and a permutation realizing it. permutation[j] is the index in V
/// matched to element j of U.
struct MatchingResult {
    double value = 0.0;
    std::vector<std::size_t> permutation;
};

}  // namespace rootspace
