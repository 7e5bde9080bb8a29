#include "lefschetz/tower.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include "lefschetz/monomial.hpp"

namespace lefschetz {

template <class F>
IdealTower<F>::IdealTower(F field, int num_vars, std::vector<FormT<Value>> generators)
    : field_(std::move(field)), num_vars_(num_vars), gens_(std::move(generators)) {
  if (num_vars < 1 || num_vars > kMaxVars) {
    throw std::invalid_argument("IdealTower: num_vars out of range");
  }
  for (const auto& g : gens_) {
    if (g.num_vars != num_vars) throw std::invalid_argument("IdealTower: generator num_vars mismatch");
    if (g.degree < 1) throw std::invalid_argument("IdealTower: generators must have degree >= 1");
  }
}

template <class F>
void IdealTower<F>::advance_to(int t) {
  if (t < 0) throw std::invalid_argument("IdealTower: negative degree");
  if (t > kMaxDegree) throw std::out_of_range("IdealTower: degree beyond kMaxDegree");
  while (top_degree() < t) advance_one();
}

template <class F>
void IdealTower<F>::drop_tails(int t) {
  if (t < 0 || t > top_degree()) return;
  auto& lvl = levels_[static_cast<std::size_t>(t)];
  for (auto& r : lvl.rows) {
    r.cols = {};
    r.vals = {};
  }
  lvl.tails_present = false;
}

template <class F>
void IdealTower<F>::drop_tails_below(int t) {
  for (int s = 0; s < t && s <= top_degree(); ++s) {
    if (levels_[static_cast<std::size_t>(s)].tails_present) drop_tails(s);
  }
}

namespace {

// Ordering descriptor for one candidate row of the new level.
struct Candidate {
  std::int64_t lead;  // column index of the leading monomial
  std::int32_t kind;  // 0 = shifted stored row, 1 = fresh generator
  std::int32_t var;   // shift variable (kind 0)
  std::int32_t index; // stored-row index (kind 0) or generator index (kind 1)
};

}  // namespace

template <class F>
void IdealTower<F>::advance_one() {
  const int t = top_degree() + 1;
  const int nv = num_vars_;

  Level lvl;
  lvl.degree = t;
  std::size_t num_cols = 0;
  lvl.expo = enumerate_exponents_flat(nv, t, num_cols);
  lvl.num_cols = num_cols;
  lvl.pivot_row.assign(num_cols, -1);

  const Level* prev = t > 0 ? &levels_[static_cast<std::size_t>(t - 1)] : nullptr;
  if (prev && !prev->tails_present && !prev->rows.empty()) {
    throw std::logic_error("IdealTower: cannot advance past a level whose tails were dropped");
  }

  // Candidate rows: x_j * (each reduced row of level t-1), plus generators of
  // degree exactly t. Sorted by leading column so most candidates either pivot
  // immediately or die quickly; RREF is canonical so order only affects work.
  std::vector<Candidate> cands;
  if (prev) {
    cands.reserve(prev->rows.size() * static_cast<std::size_t>(nv) + 4);
    for (std::int32_t j = 0; j < nv; ++j) {
      for (std::size_t r = 0; r < prev->rows.size(); ++r) {
        const auto* pe = prev->exps_of(static_cast<std::size_t>(prev->rows[r].pivot_col), nv);
        const auto lead = static_cast<std::int64_t>(shifted_index(pe, nv, t - 1, j));
        cands.push_back({lead, 0, j, static_cast<std::int32_t>(r)});
      }
    }
  }
  for (std::size_t g = 0; g < gens_.size(); ++g) {
    if (gens_[g].degree == t && !gens_[g].is_zero()) {
      const auto lead = static_cast<std::int64_t>(monomial_index(gens_[g].terms.front().first));
      cands.push_back({lead, 1, 0, static_cast<std::int32_t>(g)});
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.lead != b.lead) return a.lead < b.lead;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.var != b.var) return a.var < b.var;
    return a.index < b.index;
  });

  // Dense scratch row + support bitmask.
  std::vector<Value> buf(num_cols, field_.zero());
  const std::size_t nwords = (num_cols + 63) / 64;
  std::vector<std::uint64_t> mask(nwords, 0);
  std::vector<std::int32_t> support;        // surviving tail columns, ascending
  std::vector<std::int32_t> merge_cols;     // scratch for back-reduction merges
  std::vector<Value> merge_vals;

  // Occurrence lists: for each column, stored-row indices whose tails may
  // contain it (lazily cleaned; stale ids are skipped).
  std::vector<std::vector<std::int32_t>> col_rows(num_cols);

  auto set_bit = [&](std::size_t c) { mask[c >> 6] |= std::uint64_t{1} << (c & 63); };

  for (const Candidate& cand : cands) {
    // Scatter the candidate into the scratch row. Scattered columns are
    // distinct (variable shift is injective on monomials), so plain stores.
    std::size_t first_word = num_cols;
    auto scatter = [&](std::size_t c, const Value& v) {
      buf[c] = v;
      set_bit(c);
      first_word = std::min(first_word, c >> 6);
    };
    if (cand.kind == 0) {
      const auto& row = prev->rows[static_cast<std::size_t>(cand.index)];
      const int j = cand.var;
      scatter(static_cast<std::size_t>(cand.lead), field_.one());
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        const auto* te = prev->exps_of(static_cast<std::size_t>(row.cols[k]), nv);
        scatter(shifted_index(te, nv, t - 1, j), row.vals[k]);
      }
    } else {
      for (const auto& [m, c] : gens_[static_cast<std::size_t>(cand.index)].terms) {
        scatter(monomial_index(m), c);
      }
    }

    // Walk the support left to right. Pivot-column hits are cancelled (their
    // tails land strictly to the right, over non-pivot columns, so each
    // initial entry triggers at most one cancellation); the first non-pivot
    // nonzero becomes this row's pivot, later ones its tail.
    std::int64_t new_pivot = -1;
    support.clear();
    for (std::size_t w = first_word; w < nwords; ++w) {
      while (mask[w]) {
        const int b = std::countr_zero(mask[w]);
        mask[w] &= mask[w] - 1;
        const std::size_t c = (w << 6) | static_cast<std::size_t>(b);
        if (field_.is_zero(buf[c])) continue;
        const std::int32_t pr = lvl.pivot_row[c];
        if (pr >= 0) {
          const Value f = buf[c];
          buf[c] = field_.zero();
          const SparseRow& prow = lvl.rows[static_cast<std::size_t>(pr)];
          for (std::size_t k = 0; k < prow.cols.size(); ++k) {
            const auto rc = static_cast<std::size_t>(prow.cols[k]);
            buf[rc] = field_.submul(buf[rc], f, prow.vals[k]);
            set_bit(rc);
          }
        } else if (new_pivot < 0) {
          new_pivot = static_cast<std::int64_t>(c);
        } else {
          support.push_back(static_cast<std::int32_t>(c));
        }
      }
    }

    if (new_pivot < 0) continue;  // candidate reduced to zero

    // Normalize and store the new reduced row.
    const std::size_t pc = static_cast<std::size_t>(new_pivot);
    const Value piv_inv = field_.inv(buf[pc]);
    SparseRow nrow;
    nrow.pivot_col = static_cast<std::int32_t>(pc);
    nrow.cols.reserve(support.size());
    nrow.vals.reserve(support.size());
    for (std::int32_t c : support) {
      Value v = buf[static_cast<std::size_t>(c)];
      buf[static_cast<std::size_t>(c)] = field_.zero();
      if (field_.is_zero(v)) continue;
      nrow.cols.push_back(c);
      nrow.vals.push_back(field_.mul(v, piv_inv));
    }
    buf[pc] = field_.zero();
    const auto row_id = static_cast<std::int32_t>(lvl.rows.size());
    for (std::int32_t c : nrow.cols) col_rows[static_cast<std::size_t>(c)].push_back(row_id);
    lvl.pivot_row[pc] = row_id;
    lvl.rows.push_back(std::move(nrow));

    // Back-reduce: clear column pc from every stored row that carries it, so
    // tails stay supported on non-pivot columns only (canonical RREF).
    auto& holders = col_rows[pc];
    if (!holders.empty()) {
      const SparseRow& prow = lvl.rows[static_cast<std::size_t>(row_id)];
      for (std::int32_t rid : holders) {
        SparseRow& R = lvl.rows[static_cast<std::size_t>(rid)];
        auto it = std::lower_bound(R.cols.begin(), R.cols.end(), static_cast<std::int32_t>(pc));
        if (it == R.cols.end() || *it != static_cast<std::int32_t>(pc)) continue;  // stale
        const std::size_t at = static_cast<std::size_t>(it - R.cols.begin());
        const Value g = R.vals[at];
        // Merge R - g * prow over sparse tails, skipping column pc itself.
        merge_cols.clear();
        merge_vals.clear();
        std::size_t i = 0, k = 0;
        while (i < R.cols.size() || k < prow.cols.size()) {
          if (i == at) {
            ++i;
            continue;
          }
          const std::int32_t rc = i < R.cols.size() ? R.cols[i] : INT32_MAX;
          const std::int32_t qc = k < prow.cols.size() ? prow.cols[k] : INT32_MAX;
          if (rc < qc) {
            merge_cols.push_back(rc);
            merge_vals.push_back(R.vals[i]);
            ++i;
          } else if (qc < rc) {
            Value v = field_.neg(field_.mul(g, prow.vals[k]));
            if (!field_.is_zero(v)) {
              merge_cols.push_back(qc);
              merge_vals.push_back(std::move(v));
              col_rows[static_cast<std::size_t>(qc)].push_back(rid);
            }
            ++k;
          } else {
            Value v = field_.submul(R.vals[i], g, prow.vals[k]);
            if (!field_.is_zero(v)) {
              merge_cols.push_back(rc);
              merge_vals.push_back(std::move(v));
            }
            ++i;
            ++k;
          }
        }
        R.cols = merge_cols;
        R.vals = merge_vals;
      }
      holders.clear();
    }
  }

  // Quotient basis = non-pivot columns, in column (graded-lex) order.
  lvl.basis_pos.assign(num_cols, -1);
  for (std::size_t c = 0; c < num_cols; ++c) {
    if (lvl.pivot_row[c] < 0) {
      lvl.basis_pos[c] = static_cast<std::int32_t>(lvl.basis_cols.size());
      lvl.basis_cols.push_back(static_cast<std::int32_t>(c));
    }
  }
  levels_.push_back(std::move(lvl));
}

template class IdealTower<PrimeField>;
template class IdealTower<RationalField>;

}  // namespace lefschetz
