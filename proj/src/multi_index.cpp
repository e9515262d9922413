#include "hsball/multi_index.hpp"

namespace hsball {

namespace {

void fill_degree(int n, int degree, std::vector<int>& scratch, int pos,
                 std::vector<MultiIndex>& out) {
    if (pos == n - 1) {
        scratch[static_cast<std::size_t>(pos)] = degree;
        out.push_back(MultiIndex(scratch));
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        scratch[static_cast<std::size_t>(pos)] = e;
        fill_degree(n, degree - e, scratch, pos + 1, out);
    }
}

}  // namespace

std::vector<MultiIndex> graded_basis(int n, int max_degree) {
    if (n < 1) throw std::invalid_argument("graded_basis: n must be >= 1");
    if (max_degree < 0) throw std::invalid_argument("graded_basis: negative degree");
    std::vector<MultiIndex> out;
    std::vector<int> scratch(static_cast<std::size_t>(n), 0);
    for (int k = 0; k <= max_degree; ++k) fill_degree(n, k, scratch, 0, out);
    return out;
}

}  // namespace hsball
