#include "katspp/hungarian.hpp"

#include <limits>
#include <stdexcept>

namespace katspp {

AssignmentResult solve_assignment(const std::vector<std::vector<Cost>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) throw std::invalid_argument("solve_assignment: empty matrix");
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("solve_assignment: matrix is not square");

    const Cost kInf = std::numeric_limits<Cost>::max() / 4;

    // 1-based arrays; p[j] is the row matched to column j, p[0] is the row
    // currently being inserted.
    std::vector<Cost> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            Cost delta = kInf;
            int j1 = -1;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const Cost cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }

    AssignmentResult result;
    result.col_of_row.assign(n, -1);
    for (int j = 1; j <= n; ++j) result.col_of_row[p[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) result.total += cost[i][result.col_of_row[i]];
    return result;
}

}  // namespace katspp
