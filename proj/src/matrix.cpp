/*
 * Copyright (C) 2026 The flipcheck Authors
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

#include "flipcheck/matrix.hpp"

#include <sstream>

namespace flipcheck {

MatrixAssignment::MatrixAssignment(Shape s, std::vector<BigInt> e) : shape(s), entries(std::move(e)) {
  if (entries.size() != shape.size()) {
    throw ShapeMismatch("matrix of shape " + std::to_string(shape.rows()) + "x" + std::to_string(shape.cols()) +
                        " needs " + std::to_string(shape.size()) + " entries, got " +
                        std::to_string(entries.size()));
  }
}

MatrixAssignment MatrixAssignment::identity(std::size_t n) {
  MatrixAssignment x(Shape::square(n));
  for (std::size_t i = 0; i < n; ++i) x.at(i, i) = 1;
  return x;
}

MatrixAssignment MatrixAssignment::unit_columns(std::size_t m, std::size_t k) {
  MatrixAssignment x(Shape::block(m, k));
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 1; i <= m; ++i) x.at(i - 1, x.shape.block_col(j, i)) = 1;
  return x;
}

std::string MatrixAssignment::serialize() const {
  std::string out = shape.kind == Shape::Kind::Square
                        ? "square " + std::to_string(shape.m)
                        : "block " + std::to_string(shape.m) + " " + std::to_string(shape.k);
  out += "\n";
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    for (std::size_t c = 0; c < shape.cols(); ++c) {
      if (c) out += " ";
      out += at(r, c).get_str();
    }
    out += "\n";
  }
  return out;
}

MatrixAssignment MatrixAssignment::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  Shape shape;
  std::size_t a = 0, b = 0;
  if (kind == "square" && (in >> a)) {
    shape = Shape::square(a);
  } else if (kind == "block" && (in >> a >> b)) {
    shape = Shape::block(a, b);
  } else {
    throw MalformedEncoding("matrix must start with `square n` or `block m k`");
  }
  std::vector<BigInt> entries;
  std::string tok;
  while (in >> tok) {
    try {
      entries.push_back(parse_bigint(tok));
    } catch (const ConfigError&) {
      throw MalformedEncoding("bad matrix entry '" + tok + "'");
    }
  }
  if (entries.size() != shape.size()) {
    throw MalformedEncoding("expected " + std::to_string(shape.size()) + " entries, got " +
                            std::to_string(entries.size()));
  }
  return MatrixAssignment(shape, std::move(entries));
}

bool is_k_generator(const GroupElement& g) {
  return std::holds_alternative<ColSwap>(g) || std::holds_alternative<ColCycle>(g) ||
         std::holds_alternative<PosThreeCycle>(g);
}

BigInt group_det(const GroupElement& g) {
  if (const auto* d = std::get_if<Diagonal>(&g)) {
    BigInt p = 1;
    for (const auto& e : d->entries) p *= e;
    return p;
  }
  if (std::holds_alternative<PermSwap>(g)) return -1;
  if (std::holds_alternative<ElementaryAdd>(g) || std::holds_alternative<RowCycle>(g)) return 1;
  throw ConfigError("generators of K have no matrix determinant");
}

std::optional<GroupElement> group_inverse(const GroupElement& g, std::size_t k) {
  if (const auto* e = std::get_if<ElementaryAdd>(&g)) return ElementaryAdd{e->i, e->j, -e->y};
  if (const auto* d = std::get_if<Diagonal>(&g)) {
    for (const auto& v : d->entries) {
      if (v != 1 && v != -1) return std::nullopt;
    }
    return g;
  }
  if (const auto* c = std::get_if<RowCycle>(&g)) return RowCycle{c->a, c->c, c->b};
  if (const auto* c = std::get_if<PosThreeCycle>(&g)) return PosThreeCycle{c->a, c->c, c->b};
  if (std::get_if<ColCycle>(&g) && k > 2) return std::nullopt;  // inverse is ColCycle^(k-1)
  return g;
}

namespace {

void check_index(std::size_t i, std::size_t bound, const char* what) {
  if (i < 1 || i > bound) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(i) + " outside [1, " +
                          std::to_string(bound) + "]");
  }
}

void check_distinct3(std::size_t a, std::size_t b, std::size_t c, std::size_t bound) {
  check_index(a, bound, "cycle");
  check_index(b, bound, "cycle");
  check_index(c, bound, "cycle");
  if (a == b || b == c || a == c) throw ConfigError("3-cycle needs distinct indices");
}

// Rows for the left action, columns for the right action.
struct LineView {
  MatrixAssignment& x;
  bool rows;
  std::size_t count() const { return rows ? x.shape.rows() : x.shape.cols(); }
  std::size_t length() const { return rows ? x.shape.cols() : x.shape.rows(); }
  BigInt& at(std::size_t line, std::size_t pos) { return rows ? x.at(line, pos) : x.at(pos, line); }
  void swap_lines(std::size_t a, std::size_t b) {
    for (std::size_t p = 0; p < length(); ++p) std::swap(at(a, p), at(b, p));
  }
};

MatrixAssignment apply_k_generator(const GroupElement& g, const MatrixAssignment& x) {
  const Shape& s = x.shape;
  if (s.kind != Shape::Kind::Block) throw ShapeMismatch("generators of K act on block matrices only");
  const std::size_t m = s.m, k = s.k;
  // source[c] is the old column whose content lands in column c.
  std::vector<std::size_t> source(s.cols());
  for (std::size_t c = 0; c < s.cols(); ++c) source[c] = c;
  if (const auto* sw = std::get_if<ColSwap>(&g)) {
    check_index(sw->i, m, "position");
    if (k < 2) throw ShapeMismatch("ColSwap needs k >= 2");
    std::swap(source[s.block_col(1, sw->i)], source[s.block_col(2, sw->i)]);
  } else if (const auto* cy = std::get_if<ColCycle>(&g)) {
    check_index(cy->i, m, "position");
    for (std::size_t j = 1; j <= k; ++j) source[s.block_col(j % k + 1, cy->i)] = s.block_col(j, cy->i);
  } else {
    const auto& p = std::get<PosThreeCycle>(g);
    check_distinct3(p.a, p.b, p.c, m);
    for (std::size_t j = 1; j <= k; ++j) {
      source[s.block_col(j, p.b)] = s.block_col(j, p.a);
      source[s.block_col(j, p.c)] = s.block_col(j, p.b);
      source[s.block_col(j, p.a)] = s.block_col(j, p.c);
    }
  }
  MatrixAssignment out(s);
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) out.at(r, c) = x.at(r, source[c]);
  return out;
}

}  // namespace

MatrixAssignment apply_group(const GroupElement& g, const MatrixAssignment& x, Side side) {
  if (is_k_generator(g)) {
    if (side != Side::Right) throw ShapeMismatch("generators of K act on the right");
    return apply_k_generator(g, x);
  }
  if (side == Side::Right && x.shape.kind == Shape::Kind::Block) {
    throw ShapeMismatch("block matrices admit only generators of K on the right");
  }
  MatrixAssignment out = x;
  LineView v{out, side == Side::Left};
  const std::size_t dim = x.shape.rows();  // square for Right
  if (const auto* e = std::get_if<ElementaryAdd>(&g)) {
    check_index(e->i, dim, "row");
    check_index(e->j, dim, "row");
    if (e->i == e->j) throw ConfigError("elementary matrix needs i != j");
    // Left: row_i += y row_j. Right: col_j += y col_i.
    const std::size_t dst = (side == Side::Left ? e->i : e->j) - 1;
    const std::size_t src = (side == Side::Left ? e->j : e->i) - 1;
    for (std::size_t p = 0; p < v.length(); ++p) v.at(dst, p) += e->y * v.at(src, p);
  } else if (const auto* d = std::get_if<Diagonal>(&g)) {
    if (d->entries.size() != dim) throw ShapeMismatch("diagonal has the wrong dimension");
    for (std::size_t l = 0; l < dim; ++l)
      for (std::size_t p = 0; p < v.length(); ++p) v.at(l, p) *= d->entries[l];
  } else if (const auto* sw = std::get_if<PermSwap>(&g)) {
    check_index(sw->i, dim - 1, "swap");
    v.swap_lines(sw->i - 1, sw->i);
  } else {
    const auto& c = std::get<RowCycle>(g);
    check_distinct3(c.a, c.b, c.c, dim);
    // Left: row b <- row a, c <- b, a <- c. Right: col a <- col b, b <- c, c <- a.
    const std::size_t a = c.a - 1, b = c.b - 1, cc = c.c - 1;
    if (side == Side::Left) {
      v.swap_lines(a, b);
      v.swap_lines(a, cc);
    } else {
      v.swap_lines(a, b);
      v.swap_lines(b, cc);
    }
  }
  return out;
}

std::vector<GroupElement> k_generators(std::size_t m, std::size_t k) {
  std::vector<GroupElement> gens;
  if (k >= 2) {
    for (std::size_t i = 1; i <= m; ++i) {
      gens.push_back(ColSwap{i});
      gens.push_back(ColCycle{i});
    }
  }
  for (std::size_t j = 3; j <= m; ++j) gens.push_back(PosThreeCycle{1, 2, j});
  return gens;
}

std::string describe(const GroupElement& g) {
  auto list = [](std::initializer_list<std::string> xs) {
    std::string s = "(";
    bool first = true;
    for (const auto& x : xs) {
      if (!first) s += ",";
      s += x;
      first = false;
    }
    return s + ")";
  };
  using std::to_string;
  if (const auto* e = std::get_if<ElementaryAdd>(&g)) return "eadd" + list({to_string(e->i), to_string(e->j), e->y.get_str()});
  if (const auto* d = std::get_if<Diagonal>(&g)) {
    std::string s = "diag(";
    for (std::size_t i = 0; i < d->entries.size(); ++i) s += (i ? "," : "") + d->entries[i].get_str();
    return s + ")";
  }
  if (const auto* p = std::get_if<PermSwap>(&g)) return "swap" + list({to_string(p->i)});
  if (const auto* c = std::get_if<RowCycle>(&g)) return "cycle" + list({to_string(c->a), to_string(c->b), to_string(c->c)});
  if (const auto* c = std::get_if<ColSwap>(&g)) return "colswap" + list({to_string(c->i)});
  if (const auto* c = std::get_if<ColCycle>(&g)) return "colcycle" + list({to_string(c->i)});
  const auto& p = std::get<PosThreeCycle>(g);
  return "pos3" + list({to_string(p.a), to_string(p.b), to_string(p.c)});
}

}  // namespace flipcheck
