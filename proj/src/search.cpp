#include "satmat/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <string>

#include "satmat/witness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace satmat {

namespace {

std::uint64_t binom(int n, int k) {
    // n stays <= 64 (enforced by the cell cap), so everything fits in 64 bits
    static const auto table = [] {
        std::array<std::array<std::uint64_t, 65>, 65> t{};
        for (int i = 0; i <= 64; ++i) {
            t[i][0] = 1;
            for (int j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j <= i - 1 ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k < 0 || k > n) return 0;
    return table[n][k];
}

struct Deadline {
    bool enabled = false;
    std::chrono::steady_clock::time_point at{};

    static Deadline from(const SearchBudget& budget) {
        Deadline d;
        if (budget.time_limit.count() > 0) {
            d.enabled = true;
            d.at = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       budget.time_limit);
        }
        return d;
    }

    bool passed() const {
        return enabled && std::chrono::steady_clock::now() >= at;
    }
};

// Weight-w cell subsets of a rows x cols grid, enumerated so the matrices
// come out in increasing matrix order (matrix_less). Internally the
// complement-reversed cell indices are stepped colexicographically, which
// matches that order and gives O(1) ranking via the combinatorial number
// system.
class WeightClass {
public:
    WeightClass(int rows, int cols, int w)
        : rows_(rows), cols_(cols), total_(rows * cols), w_(w), rev_(w) {
        for (int i = 0; i < w_; ++i) rev_[i] = i;
    }

    std::uint64_t count() const { return binom(total_, w_); }

    void seek(std::uint64_t rank) {
        for (int i = w_ - 1; i >= 0; --i) {
            int v = (i + 1 < w_) ? rev_[i + 1] - 1 : total_ - 1;
            while (binom(v, i + 1) > rank) --v;
            rev_[i] = v;
            rank -= binom(v, i + 1);
        }
    }

    bool advance() {
        for (int i = 0; i < w_; ++i) {
            int limit = (i + 1 < w_) ? rev_[i + 1] : total_;
            if (rev_[i] + 1 < limit) {
                ++rev_[i];
                for (int j = 0; j < i; ++j) rev_[j] = j;
                return true;
            }
        }
        return false;
    }

    void fill(Matrix& m) const {
        m.clear();
        for (int v : rev_) {
            int cell = total_ - 1 - v;
            m.set(cell / cols_, cell % cols_, true);
        }
    }

private:
    int rows_, cols_, total_, w_;
    std::vector<int> rev_;
};

// Rank of the first weight-w matrix satisfying pred, scanning in matrix
// order. Exact and deterministic in both execution modes.
template <typename Pred>
std::optional<std::uint64_t> scan_weight(int rows, int cols, int w,
                                         const Pred& pred, Exec exec,
                                         const Deadline& deadline,
                                         const char* op, int partial_bound) {
    const std::uint64_t total = binom(rows * cols, w);
    auto timeout = [&] {
        throw ResourceError(std::string(op) + ": time limit reached", partial_bound);
    };
#ifdef _OPENMP
    if (exec == Exec::parallel) {
        std::atomic<std::uint64_t> best{UINT64_MAX};
        std::atomic<bool> timed_out{false};
#pragma omp parallel
        {
            int threads = omp_get_num_threads();
            std::uint64_t chunk = (total + threads - 1) / threads;
            std::uint64_t lo = (std::uint64_t)omp_get_thread_num() * chunk;
            std::uint64_t hi = std::min(total, lo + chunk);
            if (lo < hi) {
                WeightClass combos(rows, cols, w);
                combos.seek(lo);
                Matrix scratch(rows, cols);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    if (rank >= best.load(std::memory_order_relaxed)) break;
                    if ((rank & 1023) == 0) {
                        if (timed_out.load(std::memory_order_relaxed)) break;
                        if (deadline.passed()) {
                            timed_out.store(true, std::memory_order_relaxed);
                            break;
                        }
                    }
                    combos.fill(scratch);
                    if (pred(scratch)) {
                        std::uint64_t cur = best.load(std::memory_order_relaxed);
                        while (rank < cur &&
                               !best.compare_exchange_weak(cur, rank)) {
                        }
                        break;
                    }
                    combos.advance();
                }
            }
        }
        if (timed_out.load()) timeout();
        if (best.load() != UINT64_MAX) return best.load();
        return std::nullopt;
    }
#else
    (void)exec;
#endif
    WeightClass combos(rows, cols, w);
    Matrix scratch(rows, cols);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        if ((rank & 1023) == 0 && deadline.passed()) timeout();
        combos.fill(scratch);
        if (pred(scratch)) return rank;
        combos.advance();
    }
    return std::nullopt;
}

Matrix matrix_at(int rows, int cols, int w, std::uint64_t rank) {
    WeightClass combos(rows, cols, w);
    combos.seek(rank);
    Matrix out(rows, cols);
    combos.fill(out);
    return out;
}

void check_grid(const char* op, int rows, int cols, const SearchBudget& budget) {
    if (rows < 1 || cols < 1)
        throw ContractError(std::string(op) + ": grid dimensions must be positive");
    if (rows > Matrix::max_dim || cols > Matrix::max_dim)
        throw ContractError(std::string(op) + ": grid dimensions are limited to 64");
    int cells = rows * cols;
    if (cells > budget.max_cells)
        throw ResourceError(std::string(op) + ": grid has " + std::to_string(cells) +
                                " cells, over the budget of " +
                                std::to_string(budget.max_cells),
                            0);
    if (cells > 64)
        throw ResourceError(
            std::string(op) + ": exhaustive search supports at most 64 cells", 0);
}

// Branch-and-bound maximizer for avoiding matrices: decide each cell in
// row-major order, 1 before 0, pruning when even an all-1 completion cannot
// beat the incumbent.
struct ExSearch {
    const Pattern& p;
    int rows, cols, cells;
    const Deadline& deadline;
    Matrix cur;
    int best;
    std::uint64_t ticks = 0;

    ExSearch(const Pattern& p, int rows, int cols, int seed, const Deadline& dl)
        : p(p), rows(rows), cols(cols), cells(rows * cols), deadline(dl),
          cur(rows, cols), best(seed) {}

    void run(int idx, int weight) {
        if (weight + (cells - idx) <= best) return;
        if (idx == cells) {
            best = weight;
            return;
        }
        if ((++ticks & 4095) == 0 && deadline.passed())
            throw ResourceError("ex_exact: time limit reached", best);
        int i = idx / cols, j = idx % cols;
        cur.set(i, j, true);
        if (!contains_using(cur, p, i, j)) run(idx + 1, weight + 1);
        cur.set(i, j, false);
        run(idx + 1, weight);
    }
};

}  // namespace

bool is_saturated(const Matrix& m, const Pattern& p, Exec exec) {
    if (contains(m, p)) return false;
    int cells = m.rows() * m.cols();
    bool ok = true;
    if (exec == Exec::parallel) {
#pragma omp parallel
        {
            Matrix scratch = m;
#pragma omp for reduction(&& : ok)
            for (int c = 0; c < cells; ++c) {
                int i = c / m.cols(), j = c % m.cols();
                if (scratch.get(i, j)) continue;
                scratch.set(i, j, true);
                bool hit = contains_using(scratch, p, i, j).has_value();
                scratch.set(i, j, false);
                ok = ok && hit;
            }
        }
        return ok;
    }
    Matrix scratch = m;
    for (int c = 0; c < cells && ok; ++c) {
        int i = c / m.cols(), j = c % m.cols();
        if (scratch.get(i, j)) continue;
        scratch.set(i, j, true);
        ok = contains_using(scratch, p, i, j).has_value();
        scratch.set(i, j, false);
    }
    return ok;
}

SearchResult sat_exact(const Pattern& p, int rows, int cols,
                       const SearchBudget& budget, Exec exec) {
    check_grid("sat_exact", rows, cols, budget);
    Deadline deadline = Deadline::from(budget);
    int cells = rows * cols;
    for (int w = 0; w <= cells; ++w) {
        if (deadline.passed())
            throw ResourceError("sat_exact: time limit reached", w);
        auto pred = [&](const Matrix& cand) {
            return is_saturated(cand, p, Exec::serial);
        };
        if (auto rank = scan_weight(rows, cols, w, pred, exec, deadline,
                                    "sat_exact", w))
            return {w, matrix_at(rows, cols, w, *rank)};
    }
    // saturating the zero matrix always yields a saturated matrix, so some
    // weight class above must have matched
    throw ContractError("sat_exact: no saturated matrix found");
}

SearchResult ex_exact(const Pattern& p, int rows, int cols,
                      const SearchBudget& budget, Exec exec) {
    check_grid("ex_exact", rows, cols, budget);
    Deadline deadline = Deadline::from(budget);
    int seed = saturate(Matrix(rows, cols), p).weight();
    ExSearch search(p, rows, cols, seed, deadline);
    search.run(0, 0);
    int best = search.best;
    auto pred = [&](const Matrix& cand) { return !contains(cand, p).has_value(); };
    auto rank = scan_weight(rows, cols, best, pred, exec, deadline, "ex_exact", best);
    if (!rank) throw ContractError("ex_exact: no attaining matrix found");
    return {best, matrix_at(rows, cols, best, *rank)};
}

std::vector<Pattern> enumerate_permutations(int k) {
    if (k < 1 || k > 8)
        throw ContractError("enumerate_permutations: size must be in 1..8");
    std::vector<int> word(k);
    for (int i = 0; i < k; ++i) word[i] = i;
    std::vector<Pattern> out;
    do {
        Matrix m(k, k);
        for (int i = 0; i < k; ++i) m.set(i, word[i], true);
        out.push_back(Pattern(std::move(m), /*strict=*/true));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

std::vector<Matrix> symmetry_orbit(const Matrix& m, SymmetryGroup g) {
    std::vector<SymmetryOp> gens;
    switch (g) {
        case SymmetryGroup::reflections_only:
            gens = {SymmetryOp::reflect_rows, SymmetryOp::reflect_cols};
            break;
        case SymmetryGroup::rotations_and_reflections:
            gens = {SymmetryOp::rotate90cw, SymmetryOp::reflect_rows};
            break;
        case SymmetryGroup::full:
            gens = {SymmetryOp::rotate90cw, SymmetryOp::reflect_rows,
                    SymmetryOp::transpose};
            break;
    }
    std::vector<Matrix> orbit{m};
    for (std::size_t head = 0; head < orbit.size(); ++head)
        for (SymmetryOp op : gens) {
            Matrix img = apply_symmetry(orbit[head], op);
            if (std::find(orbit.begin(), orbit.end(), img) == orbit.end())
                orbit.push_back(std::move(img));
        }
    std::sort(orbit.begin(), orbit.end(), matrix_less);
    return orbit;
}

Matrix canonical_form(const Matrix& m, SymmetryGroup g) {
    return symmetry_orbit(m, g).front();
}

}  // namespace satmat
