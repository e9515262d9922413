#pragma once

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hsball {

/// Exponent vector of a monomial z^alpha on C^n. Ordering is graded:
/// degree-major, lexicographic within a degree, so that iterating a map keyed
/// by MultiIndex visits the monomial basis in a fixed reproducible order.
class MultiIndex {
public:
    MultiIndex() = default;

    explicit MultiIndex(std::vector<int> exponents) : exps_(std::move(exponents)) {
        if (exps_.empty())
            throw std::invalid_argument("MultiIndex: dimension must be >= 1");
        for (int e : exps_)
            if (e < 0)
                throw std::invalid_argument("MultiIndex: negative exponent");
    }

    static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(n, 0)); }

    static MultiIndex unit(int n, int coordinate) {
        std::vector<int> e(n, 0);
        e.at(coordinate) = 1;
        return MultiIndex(std::move(e));
    }

    int dimension() const { return static_cast<int>(exps_.size()); }

    int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

    int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

    const std::vector<int>& exponents() const { return exps_; }

    MultiIndex plus(const MultiIndex& other) const {
        if (other.dimension() != dimension())
            throw std::invalid_argument("MultiIndex: dimension mismatch");
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
        return MultiIndex(std::move(e));
    }

    /// Componentwise alpha - other when other <= alpha, else false.
    bool minus(const MultiIndex& other, MultiIndex& out) const {
        if (other.dimension() != dimension()) return false;
        std::vector<int> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] -= other.exps_[i];
            if (e[i] < 0) return false;
        }
        out = MultiIndex(std::move(e));
        return true;
    }

    bool operator==(const MultiIndex& other) const = default;

    bool operator<(const MultiIndex& other) const {
        const int da = degree(), db = other.degree();
        if (da != db) return da < db;
        return exps_ < other.exps_;
    }

private:
    std::vector<int> exps_;
};

/// All multi-indices with degree <= max_degree in graded-lex order.
std::vector<MultiIndex> graded_basis(int n, int max_degree);

}  // namespace hsball
