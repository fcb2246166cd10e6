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
#include "rootspace/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>

namespace rootspace {

std::vector<Complex> RootMultiset::sorted_elems() const {
    std::vector<Complex> out = elems_;
    std::sort(out.begin(), out.end(), detail::lex_less);
    return out;
}

double poly_metric(const MonicPolynomial& f, const MonicPolynomial& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("degree mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < f.degree(); ++j) {
        m = std::max(m, std::abs(f.coeff(j) - g.coeff(j)));
    }
    return m;
}

double sup_metric(const ComplexTuple& u, const ComplexTuple& v) {
    if (u.size() != v.size()) throw std::invalid_argument("length mismatch");
    double m = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        m = std::max(m, std::abs(u[j] - v[j]));
    }
    return m;
}

RootMultiset project(const ComplexTuple& u) { return RootMultiset(u.entries()); }

ComplexTuple permute(const ComplexTuple& u, const std::vector<std::size_t>& sigma) {
    const std::size_t n = u.size();
    if (sigma.size() != n) throw std::invalid_argument("permutation is not a bijection");
    std::vector<bool> seen(n, false);
    for (std::size_t j : sigma) {
        if (j >= n || seen[j]) throw std::invalid_argument("permutation is not a bijection");
        seen[j] = true;
    }
    std::vector<Complex> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = u[sigma[j]];
    return ComplexTuple(std::move(out));
}

namespace {

// Hopcroft-Karp maximum matching on the bipartite graph whose edges are
// the (i, j) pairs with dist[i*n+j] <= threshold.
class ThresholdMatcher {
public:
    ThresholdMatcher(const std::vector<double>& dist, std::size_t n) : dist_(dist), n_(n) {}

    // Size of a maximum matching at the given threshold; fills match_left
    // (left index -> right index, or npos when unmatched).
    std::size_t run(double threshold, std::vector<std::size_t>& match_left) {
        static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
        threshold_ = threshold;
        match_left.assign(n_, kFree);
        match_right_.assign(n_, kFree);
        std::size_t matched = 0;
        while (bfs(match_left)) {
            for (std::size_t i = 0; i < n_; ++i) {
                if (match_left[i] == kFree && dfs(i, match_left)) ++matched;
            }
        }
        return matched;
    }

private:
    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    static constexpr std::uint32_t kInf = static_cast<std::uint32_t>(-1);

    bool edge(std::size_t i, std::size_t j) const { return dist_[i * n_ + j] <= threshold_; }

    bool bfs(const std::vector<std::size_t>& match_left) {
        layer_.assign(n_, kInf);
        queue_.clear();
        for (std::size_t i = 0; i < n_; ++i) {
            if (match_left[i] == kFree) {
                layer_[i] = 0;
                queue_.push_back(i);
            }
        }
        bool reached_free = false;
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const std::size_t i = queue_[head];
            for (std::size_t j = 0; j < n_; ++j) {
                if (!edge(i, j)) continue;
                const std::size_t k = match_right_[j];
                if (k == kFree) {
                    reached_free = true;
                } else if (layer_[k] == kInf) {
                    layer_[k] = layer_[i] + 1;
                    queue_.push_back(k);
                }
            }
        }
        return reached_free;
    }

    bool dfs(std::size_t i, std::vector<std::size_t>& match_left) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (!edge(i, j)) continue;
            const std::size_t k = match_right_[j];
            if (k == kFree || (layer_[k] == layer_[i] + 1 && dfs(k, match_left))) {
                match_left[i] = j;
                match_right_[j] = i;
                return true;
            }
        }
        layer_[i] = kInf;
        return false;
    }

    const std::vector<double>& dist_;
    std::size_t n_;
    double threshold_ = 0.0;
    std::vector<std::size_t> match_right_;
    std::vector<std::uint32_t> layer_;
    std::vector<std::size_t> queue_;
};

}  // namespace

MatchingResult multiset_metric(const RootMultiset& u, const RootMultiset& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
    const std::size_t n = u.size();

    std::vector<double> dist(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            dist[i * n + j] = std::abs(u.elems()[i] - v.elems()[j]);
        }
    }

    // Candidate values are the exact pairwise distances; the answer is the
    // smallest one admitting a perfect matching.
    std::vector<double> values = dist;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    ThresholdMatcher matcher(dist, n);
    std::vector<std::size_t> match_left;
    std::size_t lo = 0;
    std::size_t hi = values.size() - 1;  // max distance always matches (complete graph)
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (matcher.run(values[mid], match_left) == n) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }

    MatchingResult result;
    result.value = values[lo];
    matcher.run(values[lo], result.permutation);
    return result;
}

MatchingResult multiset_metric_naive(const RootMultiset& u, const RootMultiset& v) {
    if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
    const std::size_t n = u.size();
    if (n > 8) throw std::invalid_argument("oracle size limit");

    std::vector<std::size_t> tau(n);
    std::iota(tau.begin(), tau.end(), 0);

    MatchingResult best;
    best.value = std::numeric_limits<double>::infinity();
    do {
        double worst = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            worst = std::max(worst, std::abs(u.elems()[j] - v.elems()[tau[j]]));
        }
        if (worst < best.value) {
            best.value = worst;
            best.permutation = tau;
        }
    } while (std::next_permutation(tau.begin(), tau.end()));
    return best;
}

}  // namespace rootspace
