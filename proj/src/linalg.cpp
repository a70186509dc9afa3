#include "gerst/linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "gerst/parallel.hpp"

namespace gerst {

namespace detail {

// Dense scratch space for reducing one vector; reusable across calls.
struct Workspace {
  explicit Workspace(size_t n) : acc(n), queued(n, 0) {}
  Vector acc;
  std::vector<char> queued;
  std::vector<uint32_t> heap;
  std::vector<uint32_t> touched;
};

struct Step {
  uint32_t row;
  Scalar coeff;
};

// Rows with leading coefficient 1, at most one per pivot index. Rows are only
// reduced against each other by back_substitute().
class Echelon {
 public:
  Echelon(const Field& field, size_t n) : field_(field), n_(n), pivot_of_(n, -1) {}

  size_t dim() const { return n_; }
  size_t size() const { return rows_.size(); }
  const SparseVec& row(size_t i) const { return rows_[i]; }
  uint32_t pivot_col(size_t i) const { return rows_[i].front().index; }

  // Writes the remainder of v after eliminating every pivot position, so
  // v = sum(step.coeff * row(step.row)) + remainder.
  SparseVec reduce(const SparseVec& v, Workspace& ws, std::vector<Step>* steps) const {
    auto cmp = std::greater<uint32_t>();
    ws.heap.clear();
    ws.touched.clear();
    for (const auto& e : v) {
      ws.acc[e.index] = e.value;
      ws.queued[e.index] = 1;
      ws.heap.push_back(e.index);
      ws.touched.push_back(e.index);
    }
    std::make_heap(ws.heap.begin(), ws.heap.end(), cmp);
    SparseVec rem;
    while (!ws.heap.empty()) {
      std::pop_heap(ws.heap.begin(), ws.heap.end(), cmp);
      const uint32_t j = ws.heap.back();
      ws.heap.pop_back();
      ws.queued[j] = 0;
      if (ws.acc[j].is_zero()) continue;
      const int32_t r = pivot_of_[j];
      if (r < 0) {
        rem.push_back({j, ws.acc[j]});
        continue;
      }
      const Scalar c = ws.acc[j];
      const Scalar negc = field_.neg(c);
      if (steps) steps->push_back({static_cast<uint32_t>(r), c});
      ws.acc[j] = Scalar();
      const SparseVec& row = rows_[r];
      for (size_t k = 1; k < row.size(); ++k) {
        const uint32_t idx = row[k].index;
        field_.add_mul(ws.acc[idx], negc, row[k].value);
        if (!ws.queued[idx]) {
          ws.queued[idx] = 1;
          ws.heap.push_back(idx);
          std::push_heap(ws.heap.begin(), ws.heap.end(), cmp);
          ws.touched.push_back(idx);
        }
      }
    }
    for (uint32_t i : ws.touched) ws.acc[i] = Scalar();
    return rem;
  }

  // Appends a nonzero remainder, scaled to leading 1. Returns the inverse of
  // the original leading coefficient.
  Scalar add_row(SparseVec rem) {
    Scalar lead_inv = field_.inv(rem.front().value);
    for (auto& e : rem) e.value = field_.mul(e.value, lead_inv);
    pivot_of_[rem.front().index] = static_cast<int32_t>(rows_.size());
    rows_.push_back(std::move(rem));
    return lead_inv;
  }

  // Turns the rows into reduced row echelon form.
  void back_substitute(Workspace& ws) {
    std::vector<size_t> order(rows_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pivot_col(a) > pivot_col(b); });
    for (size_t id : order) {
      SparseVec& row = rows_[id];
      bool needs = false;
      for (size_t k = 1; k < row.size(); ++k) {
        if (pivot_of_[row[k].index] >= 0) {
          needs = true;
          break;
        }
      }
      if (!needs) continue;
      ws.touched.clear();
      for (const auto& e : row) {
        ws.acc[e.index] = e.value;
        ws.queued[e.index] = 1;
        ws.touched.push_back(e.index);
      }
      for (size_t k = 1; k < row.size(); ++k) {
        const int32_t other = pivot_of_[row[k].index];
        if (other < 0) continue;
        const Scalar negc = field_.neg(ws.acc[row[k].index]);
        if (negc.is_zero()) continue;
        for (const auto& e : rows_[other]) {
          field_.add_mul(ws.acc[e.index], negc, e.value);
          if (!ws.queued[e.index]) {
            ws.queued[e.index] = 1;
            ws.touched.push_back(e.index);
          }
        }
      }
      std::sort(ws.touched.begin(), ws.touched.end());
      SparseVec out;
      for (uint32_t i : ws.touched) {
        if (!ws.acc[i].is_zero()) out.push_back({i, ws.acc[i]});
        ws.acc[i] = Scalar();
        ws.queued[i] = 0;
      }
      row = std::move(out);
    }
  }

 private:
  Field field_;
  size_t n_;
  std::vector<int32_t> pivot_of_;
  std::vector<SparseVec> rows_;
};

// Disjoint-set forest used to find independent blocks.
class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  size_t find(size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
  }

 private:
  std::vector<size_t> parent_;
};

struct Blocks {
  // block id per index, -1 for indices touched by no vector
  std::vector<int32_t> block_of;
  std::vector<uint32_t> local_of;
  std::vector<std::vector<uint32_t>> members;  // sorted global indices
  std::vector<std::vector<size_t>> vectors;    // vector ids per block, ascending
};

// Partitions the index space [0, n) by the incidence of the given sparse
// vectors: indices sharing a vector end up in the same block.
Blocks find_blocks(size_t n, const std::vector<const SparseVec*>& vecs) {
  UnionFind uf(n);
  std::vector<char> used(n, 0);
  for (const SparseVec* v : vecs) {
    for (const auto& e : *v) {
      used[e.index] = 1;
      uf.unite(v->front().index, e.index);
    }
  }
  Blocks b;
  b.block_of.assign(n, -1);
  b.local_of.assign(n, 0);
  std::vector<int32_t> root_block(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (!used[i]) continue;
    size_t r = uf.find(i);
    if (root_block[r] < 0) {
      root_block[r] = static_cast<int32_t>(b.members.size());
      b.members.emplace_back();
    }
    const int32_t id = root_block[r];
    b.block_of[i] = id;
    b.local_of[i] = static_cast<uint32_t>(b.members[id].size());
    b.members[id].push_back(static_cast<uint32_t>(i));
  }
  b.vectors.resize(b.members.size());
  for (size_t k = 0; k < vecs.size(); ++k) {
    if (vecs[k]->empty()) continue;
    b.vectors[b.block_of[vecs[k]->front().index]].push_back(k);
  }
  return b;
}

SparseVec localize(const SparseVec& v, const Blocks& b) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& e : v) out.push_back({b.local_of[e.index], e.value});
  return out;
}

// Sparse accumulation of combination vectors over a small local index range.
class Combiner {
 public:
  Combiner(const Field& field, size_t n) : field_(field), acc_(n), mark_(n, 0) {}
  void add(const SparseVec& v, const Scalar& c) {
    for (const auto& e : v) {
      if (!mark_[e.index]) {
        mark_[e.index] = 1;
        touched_.push_back(e.index);
      }
      field_.add_mul(acc_[e.index], c, e.value);
    }
  }
  void add_unit(uint32_t i, const Scalar& c) { add(SparseVec{{i, Scalar(1)}}, c); }
  SparseVec take(const Scalar& scale) {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    for (uint32_t i : touched_) {
      Scalar v = field_.mul(acc_[i], scale);
      if (!v.is_zero()) out.push_back({i, std::move(v)});
      acc_[i] = Scalar();
      mark_[i] = 0;
    }
    touched_.clear();
    return out;
  }

 private:
  Field field_;
  Vector acc_;
  std::vector<char> mark_;
  std::vector<uint32_t> touched_;
};

struct SpaceBlock {
  SpaceBlock(const Field& f, size_t n) : echelon(f, n) {}
  Echelon echelon;
  std::vector<size_t> columns;      // global column ids in this block
  std::vector<SparseVec> combos;    // per echelon row, over positions in `columns`
};

struct QuotientBlock {
  QuotientBlock(const Field& f, size_t n) : echelon(f, n) {}
  Echelon echelon;
  std::vector<SparseVec> coords;    // per echelon row, keyed by global Z column
};

}  // namespace detail

using detail::Blocks;
using detail::Echelon;
using detail::Step;
using detail::Workspace;

namespace {

std::vector<const SparseVec*> pointers(const std::vector<SparseVec>& vs) {
  std::vector<const SparseVec*> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(&v);
  return out;
}

RrefResult rref_impl(const Matrix& m, bool reduce_fully) {
  const Field& field = m.field();
  const Matrix rows = m.transpose();  // column r of `rows` is row r of m
  const Blocks blocks = detail::find_blocks(m.cols(), pointers(rows.columns()));
  const size_t nb = blocks.members.size();
  std::vector<std::vector<SparseVec>> block_rows(nb);
  parallel_for(nb, [&](size_t b) {
    const size_t n = blocks.members[b].size();
    Echelon ech(field, n);
    Workspace ws(n);
    for (size_t r : blocks.vectors[b]) {
      SparseVec rem = ech.reduce(detail::localize(rows.column(r), blocks), ws, nullptr);
      if (!rem.empty()) ech.add_row(std::move(rem));
      if (ech.size() == n) break;
    }
    if (reduce_fully) ech.back_substitute(ws);
    auto& out = block_rows[b];
    for (size_t i = 0; i < ech.size(); ++i) {
      SparseVec g;
      for (const auto& e : ech.row(i)) g.push_back({blocks.members[b][e.index], e.value});
      out.push_back(std::move(g));
    }
  });
  std::vector<SparseVec> all;
  for (auto& br : block_rows) {
    for (auto& r : br) all.push_back(std::move(r));
  }
  std::sort(all.begin(), all.end(),
            [](const SparseVec& a, const SparseVec& b) { return a.front().index < b.front().index; });
  RrefResult res;
  res.rank = all.size();
  std::vector<SparseVec> cols(m.cols());
  for (size_t i = 0; i < all.size(); ++i) {
    res.pivots.push_back(all[i].front().index);
    for (auto& e : all[i]) cols[e.index].push_back({static_cast<uint32_t>(i), std::move(e.value)});
  }
  res.reduced = Matrix::from_columns(field, m.rows(), std::move(cols));
  return res;
}

}  // namespace

RrefResult rref(const Matrix& m) { return rref_impl(m, true); }

size_t rank(const Matrix& m) { return rref_impl(m, false).rank; }

Matrix kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (size_t p : r.pivots) is_pivot[p] = 1;
  std::vector<SparseVec> cols;
  const Field& field = m.field();
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    SparseVec k;
    k.push_back({static_cast<uint32_t>(f), Scalar(1)});
    for (const auto& e : r.reduced.column(f)) {
      k.push_back({static_cast<uint32_t>(r.pivots[e.index]), field.neg(e.value)});
    }
    std::sort(k.begin(), k.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    cols.push_back(std::move(k));
  }
  return Matrix::from_columns(field, m.cols(), std::move(cols));
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref_impl(m, false).pivots); }

std::optional<Vector> membership(const Vector& v, const Matrix& span) {
  if (v.size() != span.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "membership: vector length " + std::to_string(v.size()) +
                                                  " vs ambient " + std::to_string(span.rows()));
  }
  return ColumnSpace(span).solve(v);
}

ColumnSpace::ColumnSpace(const Matrix& span)
    : field_(span.field()), rows_(span.rows()), cols_(span.cols()) {
  const Blocks blocks = detail::find_blocks(rows_, pointers(span.columns()));
  row_block_ = blocks.block_of;
  row_local_ = blocks.local_of;
  const size_t nb = blocks.members.size();
  blocks_.resize(nb);
  parallel_for(nb, [&](size_t b) {
    const size_t n = blocks.members[b].size();
    auto blk = std::make_unique<detail::SpaceBlock>(field_, n);
    const auto& cols = blocks.vectors[b];
    blk->columns.assign(cols.begin(), cols.end());
    Workspace ws(n);
    detail::Combiner comb(field_, cols.size());
    std::vector<Step> steps;
    for (size_t k = 0; k < cols.size() && blk->echelon.size() < n; ++k) {
      steps.clear();
      SparseVec rem = blk->echelon.reduce(detail::localize(span.column(cols[k]), blocks), ws, &steps);
      if (rem.empty()) continue;
      comb.add_unit(static_cast<uint32_t>(k), Scalar(1));
      for (const auto& s : steps) comb.add(blk->combos[s.row], field_.neg(s.coeff));
      Scalar inv = blk->echelon.add_row(std::move(rem));
      blk->combos.push_back(comb.take(inv));
    }
    blocks_[b] = std::move(blk);
  });
  for (const auto& blk : blocks_) {
    for (const auto& combo : blk->combos) {
      // The column that created a row is the last one in its combination.
      independent_.push_back(blk->columns[combo.back().index]);
    }
    rank_ += blk->echelon.size();
  }
  std::sort(independent_.begin(), independent_.end());
}

ColumnSpace::~ColumnSpace() = default;
ColumnSpace::ColumnSpace(ColumnSpace&&) noexcept = default;
ColumnSpace& ColumnSpace::operator=(ColumnSpace&&) noexcept = default;

std::optional<Vector> ColumnSpace::solve(const Vector& v) const {
  if (v.size() != rows_) {
    throw Error(ErrorCode::DimensionMismatch, "membership: vector length " + std::to_string(v.size()) +
                                                  " vs ambient " + std::to_string(rows_));
  }
  std::vector<SparseVec> parts(blocks_.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (row_block_[i] < 0) return std::nullopt;
    parts[row_block_[i]].push_back({row_local_[i], v[i]});
  }
  Vector c(cols_);
  std::vector<Step> steps;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (parts[b].empty()) continue;
    const auto& blk = *blocks_[b];
    Workspace ws(blk.echelon.dim());
    steps.clear();
    if (!blk.echelon.reduce(parts[b], ws, &steps).empty()) return std::nullopt;
    for (const auto& s : steps) {
      for (const auto& e : blk.combos[s.row]) field_.add_mul(c[blk.columns[e.index]], s.coeff, e.value);
    }
  }
  return c;
}

Quotient::Quotient(const Matrix& z, const Matrix& b) : field_(z.field()), rows_(z.rows()) {
  require_same_field(z.field(), b.field());
  if (b.rows() != z.rows()) throw Error(ErrorCode::DimensionMismatch, "quotient: ambient dimensions differ");
  std::vector<const SparseVec*> vecs = pointers(b.columns());
  for (const auto& c : z.columns()) vecs.push_back(&c);
  const Blocks blocks = detail::find_blocks(rows_, vecs);
  row_block_ = blocks.block_of;
  row_local_ = blocks.local_of;
  const size_t nb = blocks.members.size();
  const size_t nbcols = b.cols();
  blocks_.resize(nb);
  std::vector<std::vector<size_t>> block_reps(nb);
  parallel_for(nb, [&](size_t bi) {
    const size_t n = blocks.members[bi].size();
    Workspace ws(n);
    std::vector<size_t> bcols, zcols;
    for (size_t k : blocks.vectors[bi]) {
      if (k < nbcols) {
        bcols.push_back(k);
      } else {
        zcols.push_back(k - nbcols);
      }
    }
    Echelon zspan(field_, n);
    for (size_t k : zcols) {
      SparseVec rem = zspan.reduce(detail::localize(z.column(k), blocks), ws, nullptr);
      if (!rem.empty()) zspan.add_row(std::move(rem));
    }
    for (size_t k : bcols) {
      if (!zspan.reduce(detail::localize(b.column(k), blocks), ws, nullptr).empty()) {
        throw Error(ErrorCode::NotASubspace, "quotient: coboundary column " + std::to_string(k) +
                                                 " is not in the span of the cocycles");
      }
    }
    auto blk = std::make_unique<detail::QuotientBlock>(field_, n);
    for (size_t k : bcols) {
      SparseVec rem = blk->echelon.reduce(detail::localize(b.column(k), blocks), ws, nullptr);
      if (rem.empty()) continue;
      blk->echelon.add_row(std::move(rem));
      blk->coords.emplace_back();
    }
    detail::Combiner comb(field_, z.cols());
    std::vector<Step> steps;
    for (size_t k : zcols) {
      steps.clear();
      SparseVec rem = blk->echelon.reduce(detail::localize(z.column(k), blocks), ws, &steps);
      if (rem.empty()) continue;
      comb.add_unit(static_cast<uint32_t>(k), Scalar(1));
      for (const auto& s : steps) comb.add(blk->coords[s.row], field_.neg(s.coeff));
      Scalar inv = blk->echelon.add_row(std::move(rem));
      blk->coords.push_back(comb.take(inv));
      block_reps[bi].push_back(k);
    }
    blocks_[bi] = std::move(blk);
  });
  for (const auto& r : block_reps) rep_columns_.insert(rep_columns_.end(), r.begin(), r.end());
  std::sort(rep_columns_.begin(), rep_columns_.end());
  dim_ = rep_columns_.size();
  reps_ = z.select_columns(rep_columns_);
  rep_index_.assign(z.cols(), -1);
  for (size_t i = 0; i < rep_columns_.size(); ++i) rep_index_[rep_columns_[i]] = static_cast<int32_t>(i);
}

Quotient::~Quotient() = default;
Quotient::Quotient(Quotient&&) noexcept = default;
Quotient& Quotient::operator=(Quotient&&) noexcept = default;

Vector Quotient::reduce(const Vector& v) const {
  if (v.size() != rows_) throw Error(ErrorCode::DimensionMismatch, "quotient: vector length mismatch");
  std::vector<SparseVec> parts(blocks_.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (row_block_[i] < 0) throw Error(ErrorCode::NotASubspace, "vector is not in the cocycle span");
    parts[row_block_[i]].push_back({row_local_[i], v[i]});
  }
  Vector coords(dim_);
  std::vector<Step> steps;
  for (size_t b = 0; b < blocks_.size(); ++b) {
    if (parts[b].empty()) continue;
    const auto& blk = *blocks_[b];
    Workspace ws(blk.echelon.dim());
    steps.clear();
    if (!blk.echelon.reduce(parts[b], ws, &steps).empty()) {
      throw Error(ErrorCode::NotASubspace, "vector is not in the cocycle span");
    }
    for (const auto& s : steps) {
      for (const auto& e : blk.coords[s.row]) field_.add_mul(coords[rep_index_[e.index]], s.coeff, e.value);
    }
  }
  return coords;
}

QuotientData quotient_data(const Matrix& cocycles, const Matrix& coboundaries) {
  auto q = std::make_shared<const Quotient>(cocycles, coboundaries);
  return QuotientData{q->dim(), q->representatives(), q};
}

}  // namespace gerst
