#include "circletk/c1p.hpp"

#include <algorithm>

namespace circletk {

namespace {

struct OrderSearch {
    const Matrix01* m;
    int rows, cols;
    std::vector<int> ones_total;
    std::vector<int> ones_placed;
    std::vector<bool> used;
    std::vector<int> order;
    const std::function<bool(const std::vector<int>&)>* cb;
    bool stopped = false;

    bool feasible_next(int c) {
        // every started-unfinished row must contain column c
        for (int r = 0; r < rows; r++) {
            if (ones_placed[r] > 0 && ones_placed[r] < ones_total[r] && !(*m)[r][c])
                return false;
        }
        return true;
    }

    void dfs() {
        if (stopped) return;
        if (int(order.size()) == cols) {
            if (!(*cb)(order)) stopped = true;
            return;
        }
        for (int c = 0; c < cols && !stopped; c++) {
            if (used[c]) continue;
            if (!feasible_next(c)) continue;
            used[c] = true;
            order.push_back(c);
            for (int r = 0; r < rows; r++)
                if ((*m)[r][c]) ones_placed[r]++;
            dfs();
            for (int r = 0; r < rows; r++)
                if ((*m)[r][c]) ones_placed[r]--;
            order.pop_back();
            used[c] = false;
        }
    }
};

} // namespace

void enumerate_c1p_orders(const Matrix01& m,
                          const std::function<bool(const std::vector<int>&)>& cb) {
    OrderSearch s;
    s.m = &m;
    s.rows = int(m.size());
    s.cols = s.rows ? int(m[0].size()) : 0;
    if (s.cols == 0) {
        std::vector<int> empty;
        cb(empty);
        return;
    }
    s.ones_total.assign(s.rows, 0);
    for (int r = 0; r < s.rows; r++)
        for (int c = 0; c < s.cols; c++) s.ones_total[r] += m[r][c];
    s.ones_placed.assign(s.rows, 0);
    s.used.assign(s.cols, false);
    s.cb = &cb;
    s.dfs();
}

bool order_is_c1p(const Matrix01& m, const std::vector<int>& order) {
    for (auto& row : m) {
        int first = -1, last = -1, count = 0;
        for (size_t p = 0; p < order.size(); p++) {
            if (row[order[p]]) {
                if (first < 0) first = int(p);
                last = int(p);
                count++;
            }
        }
        if (count && last - first + 1 != count) return false;
    }
    return true;
}

std::optional<PatternWitness> find_tucker(const Matrix01& m) {
    EnrichedMatrix e(int(m.size()), m.empty() ? 0 : int(m[0].size()));
    e.a = m;
    int r = e.rows, c = e.cols;
    // fixed-size families first, then parameterized by ascending size
    if (r >= 4 && c >= 5)
        if (auto w = contains_subconfiguration(e, tucker_mv())) return w;
    if (r >= 4 && c >= 6)
        if (auto w = contains_subconfiguration(e, tucker_miv())) return w;
    for (int k = 3; k <= std::min(r, c); k++)
        if (auto w = contains_subconfiguration(e, tucker_mi(k))) return w;
    for (int k = 3; k <= r && k + 1 <= c; k++)
        if (auto w = contains_subconfiguration(e, tucker_miii(k))) return w;
    for (int k = 4; k <= std::min(r, c); k++)
        if (auto w = contains_subconfiguration(e, tucker_mii(k))) return w;
    return std::nullopt;
}

C1PResult has_c1p(const Matrix01& m) {
    C1PResult res;
    bool found = false;
    std::vector<int> order;
    enumerate_c1p_orders(m, [&](const std::vector<int>& ord) {
        order = ord;
        found = true;
        return false; // first (lexicographically least) ordering suffices
    });
    if (found) {
        res.order = order;
        return res;
    }
    res.tucker = find_tucker(m);
    if (!res.tucker)
        throw std::logic_error("matrix has no consecutive-ones ordering but no Tucker witness found");
    return res;
}

NestedResult is_nested(const Matrix01& m) {
    NestedResult res;
    int rows = int(m.size());
    int cols = rows ? int(m[0].size()) : 0;
    for (int i = 0; i < rows; i++)
        for (int j = i + 1; j < rows; j++) {
            int ca = -1, cb = -1, cc = -1;
            for (int c = 0; c < cols; c++) {
                if (m[i][c] && m[j][c]) cb = c;
                else if (m[i][c]) ca = c;
                else if (m[j][c]) cc = c;
            }
            if (ca >= 0 && cb >= 0 && cc >= 0) {
                res.nested = false;
                res.gem_rows = {i, j};
                res.gem_cols = {ca, cb, cc};
                return res;
            }
        }
    res.nested = true;
    auto c1p = has_c1p(m);
    res.order = c1p.order; // laminar rows always admit one
    return res;
}

} // namespace circletk
