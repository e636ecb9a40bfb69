#include "satmat/contains.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace satmat {

namespace {

constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Backtracking embedder. Pattern rows are assigned to strictly increasing
// host rows top-down; each partial assignment keeps, per pattern column, the
// bitmask of host columns whose restriction to the chosen rows covers that
// column's 1-entries. A greedy leftmost sweep over those masks decides
// whether a strictly increasing column map still exists (and emits the
// smallest one at the leaves, which makes the first occurrence found the
// lexicographically least overall).
class Embedder {
public:
    Embedder(const Matrix& host, const Matrix& pat)
        : host_(host),
          m_(host.rows()),
          n_(host.cols()),
          kr_(pat.rows()),
          kc_(pat.cols()),
          masks_((std::size_t)(kr_ + 1) * kc_, low_mask(n_)),
          row_map_(kr_),
          col_map_(kc_),
          row_masks_(kr_) {
        for (int i = 0; i < kr_; ++i) row_masks_[i] = pat.row_bits(i);
    }

    std::optional<Occurrence> find() {
        forced_prow_ = forced_pcol_ = -1;
        return run();
    }

    std::optional<Occurrence> find_using(int prow, int pcol, int hrow, int hcol) {
        // room for the remaining pattern rows/columns around the forced cell
        if (hrow < prow || m_ - 1 - hrow < kr_ - 1 - prow) return std::nullopt;
        if (hcol < pcol || n_ - 1 - hcol < kc_ - 1 - pcol) return std::nullopt;
        forced_prow_ = prow;
        forced_hrow_ = hrow;
        forced_pcol_ = pcol;
        forced_hcol_ = hcol;
        return run();
    }

private:
    std::optional<Occurrence> run() {
        if (kr_ > m_ || kc_ > n_) return std::nullopt;
        if (!dfs(0, 0)) return std::nullopt;
        return Occurrence{row_map_, col_map_};
    }

    bool dfs(int depth, int min_row) {
        if (depth == kr_)
            return sweep(&masks_[(std::size_t)kr_ * kc_], col_map_.data());
        int lo = min_row;
        int hi = m_ - (kr_ - depth);
        if (forced_prow_ >= 0) {
            if (depth == forced_prow_) {
                lo = std::max(lo, forced_hrow_);
                hi = std::min(hi, forced_hrow_);
            } else if (depth < forced_prow_) {
                hi = std::min(hi, forced_hrow_ - (forced_prow_ - depth));
            }
        }
        const std::uint64_t* parent = &masks_[(std::size_t)depth * kc_];
        std::uint64_t* mine = &masks_[(std::size_t)(depth + 1) * kc_];
        for (int r = lo; r <= hi; ++r) {
            std::copy(parent, parent + kc_, mine);
            std::uint64_t rb = host_.row_bits(r);
            for (std::uint64_t bits = row_masks_[depth]; bits; bits &= bits - 1)
                mine[std::countr_zero(bits)] &= rb;
            if (!sweep(mine, nullptr)) continue;
            row_map_[depth] = r;
            if (dfs(depth + 1, r + 1)) return true;
        }
        return false;
    }

    // Greedy leftmost strictly increasing choice from the per-column masks.
    // Greedy is complete here: its picks are pointwise minimal among all
    // valid increasing assignments, so it fails only when none exists.
    bool sweep(const std::uint64_t* avail_by_col, int* out) const {
        int prev = -1;
        for (int j = 0; j < kc_; ++j) {
            std::uint64_t avail = avail_by_col[j] & ~low_mask(prev + 1);
            if (forced_pcol_ >= 0) {
                if (j == forced_pcol_) {
                    if (!(avail >> forced_hcol_ & 1)) return false;
                    prev = forced_hcol_;
                    if (out) out[j] = prev;
                    continue;
                }
                if (j < forced_pcol_) avail &= low_mask(forced_hcol_);
            }
            if (!avail) return false;
            prev = std::countr_zero(avail);
            if (out) out[j] = prev;
        }
        return true;
    }

    const Matrix& host_;
    int m_, n_, kr_, kc_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> row_map_, col_map_;
    std::vector<std::uint64_t> row_masks_;
    int forced_prow_ = -1, forced_hrow_ = -1;
    int forced_pcol_ = -1, forced_hcol_ = -1;
};

}  // namespace

std::optional<Occurrence> contains(const Matrix& host, const Pattern& p) {
    return Embedder(host, p.matrix()).find();
}

std::optional<Occurrence> contains_using(const Matrix& host, const Pattern& p,
                                         int row, int col) {
    if (row < 0 || row >= host.rows() || col < 0 || col >= host.cols())
        throw ContractError("contains_using: cell out of range");
    if (!host.get(row, col))
        throw ContractError("contains_using: cell is not a 1-entry");
    const Matrix& pm = p.matrix();
    Embedder embedder(host, pm);
    for (int i = 0; i < pm.rows(); ++i)
        for (int j = 0; j < pm.cols(); ++j)
            if (pm.get(i, j))
                if (auto occ = embedder.find_using(i, j, row, col)) return occ;
    return std::nullopt;
}

bool occurrence_valid(const Matrix& host, const Pattern& p, const Occurrence& occ) {
    const Matrix& pm = p.matrix();
    if ((int)occ.row_map.size() != pm.rows()) return false;
    if ((int)occ.col_map.size() != pm.cols()) return false;
    for (std::size_t i = 0; i < occ.row_map.size(); ++i) {
        int r = occ.row_map[i];
        if (r < 0 || r >= host.rows()) return false;
        if (i && occ.row_map[i - 1] >= r) return false;
    }
    for (std::size_t j = 0; j < occ.col_map.size(); ++j) {
        int c = occ.col_map[j];
        if (c < 0 || c >= host.cols()) return false;
        if (j && occ.col_map[j - 1] >= c) return false;
    }
    for (int i = 0; i < pm.rows(); ++i)
        for (int j = 0; j < pm.cols(); ++j)
            if (pm.get(i, j) && !host.get(occ.row_map[i], occ.col_map[j]))
                return false;
    return true;
}

}  // namespace satmat
