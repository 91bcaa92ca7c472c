#include "mbsb/smawk.hpp"

#include <stdexcept>

namespace mbsb {

namespace {

struct Smawk {
    const ImplicitMatrix& m;
    std::uint64_t* count;
    std::vector<RowMax> answer;  // indexed by row id

    double ev(int r, int c) {
        if (count) ++*count;
        return m.eval(r, c);
    }

    void solve(const std::vector<int>& rows, const std::vector<int>& cols) {
        if (rows.empty()) return;

        // REDUCE: keep at most |rows| columns that can still host a row maximum.
        // A strictly larger entry evicts the stacked column (leftmost tie-break).
        std::vector<int> surv;
        surv.reserve(rows.size());
        for (int c : cols) {
            while (!surv.empty()) {
                int r = rows[surv.size() - 1];
                if (ev(r, c) > ev(r, surv.back())) surv.pop_back();
                else break;
            }
            if (surv.size() < rows.size()) surv.push_back(c);
        }

        std::vector<int> odd;
        odd.reserve(rows.size() / 2);
        for (std::size_t i = 1; i < rows.size(); i += 2) odd.push_back(rows[i]);
        solve(odd, surv);

        // INTERPOLATE even rows between the answers of their odd neighbours.
        std::size_t k = 0;
        for (std::size_t i = 0; i < rows.size(); i += 2) {
            int r = rows[i];
            std::size_t hi = surv.size() - 1;
            if (i + 1 < rows.size()) {
                int next_col = answer[rows[i + 1]].col;
                std::size_t p = k;
                while (surv[p] != next_col) ++p;
                hi = p;
            }
            int best_col = surv[k];
            double best = ev(r, best_col);
            for (std::size_t j = k + 1; j <= hi; ++j) {
                double v = ev(r, surv[j]);
                if (v > best) {
                    best = v;
                    best_col = surv[j];
                }
            }
            answer[r] = RowMax{best_col, best};
            k = hi;
        }
    }
};

}  // namespace

std::vector<RowMax> row_maxima(const ImplicitMatrix& m, std::uint64_t* eval_count) {
    if (m.rows <= 0 || m.cols <= 0) throw std::invalid_argument("row_maxima: empty matrix");
    Smawk s{m, eval_count, std::vector<RowMax>(static_cast<std::size_t>(m.rows))};
    std::vector<int> rows(static_cast<std::size_t>(m.rows));
    std::vector<int> cols(static_cast<std::size_t>(m.cols));
    for (int i = 0; i < m.rows; ++i) rows[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < m.cols; ++j) cols[static_cast<std::size_t>(j)] = j;
    s.solve(rows, cols);
    return s.answer;
}

}  // namespace mbsb
