#include "qblocks/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "qblocks/qfield_io.hpp"

namespace qblocks {

json paths_to_json(const std::vector<DyckPath>& paths) {
  json arr = json::array();
  for (const auto& p : paths) arr.push_back(p.steps());
  return arr;
}

std::string paths_to_text(const std::vector<DyckPath>& paths) {
  std::ostringstream os;
  for (const auto& p : paths) os << (p.steps().empty() ? "-" : p.steps()) << "  " << p.heights_string() << "\n";
  return os.str();
}

// ------------------------------------------------------------------- tilings

json tiling_to_json(const Tiling& t) {
  json tiles = json::array();
  for (const auto& tile : t.tiles) {
    tiles.push_back({{"x", tile.x}, {"xp", tile.xp}, {"h", tile.h}, {"profile", tile.profile}});
  }
  return {{"low", t.low.steps()}, {"high", t.high.steps()}, {"tiles", tiles}};
}

Tiling tiling_from_json(const json& j) {
  Tiling t{DyckPath::from_steps(j.at("low").get<std::string>()), DyckPath::from_steps(j.at("high").get<std::string>()),
           {}};
  for (const auto& tile : j.at("tiles")) {
    DyckTile parsed(tile.at("x").get<int>(), tile.at("xp").get<int>(), tile.at("profile").get<std::vector<int>>());
    if (parsed.h != tile.at("h").get<int>()) throw std::invalid_argument("tile height does not match its profile");
    t.tiles.push_back(std::move(parsed));
  }
  return t;
}

std::string tiling_to_ascii(const Tiling& t) {
  const int steps = t.high.steps_count();
  int top = 0;
  for (int j = 0; j <= steps; ++j) top = std::max(top, t.high[j]);
  std::vector<std::string> rows(static_cast<std::size_t>(top + 1), std::string(static_cast<std::size_t>(2 * steps + 1), ' '));
  auto put = [&](int j, int m, char c) { rows[static_cast<std::size_t>(top - m)][static_cast<std::size_t>(2 * j)] = c; };
  for (int j = 0; j <= steps; ++j) {
    put(j, t.high[j], 'o');
    put(j, t.low[j], '*');
  }
  for (std::size_t i = 0; i < t.tiles.size(); ++i) {
    const char label = static_cast<char>(i < 26 ? 'a' + i : 'A' + (i - 26) % 26);
    for (const auto& c : t.tiles[i].cells()) put(c.j, c.m, label);
  }
  std::ostringstream os;
  for (int m = top; m >= 0; --m) {
    std::string row = rows[static_cast<std::size_t>(top - m)];
    row.erase(row.find_last_not_of(' ') + 1);
    os << m << " | " << row << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------------ matrices

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n}, {"order", paths_to_json(m.order)}, {"entries", rows}};
}

QMatrix matrix_from_json(const json& j) {
  QMatrix m;
  m.n = j.at("n").get<int>();
  for (const auto& s : j.at("order")) m.order.push_back(DyckPath::from_steps(s.get<std::string>()));
  if (!std::is_sorted(m.order.begin(), m.order.end())) throw std::invalid_argument("matrix order is not canonical");
  const auto& rows = j.at("entries");
  if (rows.size() != m.order.size()) throw std::invalid_argument("matrix row count does not match order");
  m.entries = DenseMatrix<RatQ>(m.order.size(), m.order.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.order.size()) throw std::invalid_argument("matrix row has the wrong length");
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.entries(r, c) = ratq_from_json(rows[r][c]);
  }
  return m;
}

std::string matrix_to_text(const QMatrix& m) {
  std::vector<std::vector<std::string>> cells(m.size() + 1, std::vector<std::string>(m.size() + 1));
  cells[0][0] = "";
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string label = m.order[i].steps().empty() ? "-" : m.order[i].steps();
    cells[0][i + 1] = label;
    cells[i + 1][0] = label;
    for (std::size_t j = 0; j < m.size(); ++j) cells[i + 1][j + 1] = to_bracket_text(m.entries(i, j));
  }
  std::vector<std::size_t> width(m.size() + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
      if (c + 1 < row.size()) line += "  ";
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

std::string matrix_to_csv(const QMatrix& m, double kappa) {
  const auto ctx = QNumeric::from_kappa(kappa);
  std::ostringstream os;
  os << "path";
  for (const auto& p : m.order) os << "," << p.steps();
  os << "\n";
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << m.order[i].steps();
    for (std::size_t j = 0; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", eval_at_kappa(m.entries(i, j), ctx).real());
      os << "," << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::string matrix_to_latex(const QMatrix& m) {
  std::ostringstream os;
  os << "% rows and columns: ";
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? ", " : "") << (m.order[i].steps().empty() ? "-" : m.order[i].steps());
  os << "\n\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " & " : "  ") << to_latex(m.entries(i, j));
    os << (i + 1 < m.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}\n";
  return os.str();
}

// ------------------------------------------------------------------- tensors

json tensor_to_json(const TensorVec& v) {
  json terms = json::array();
  for (const auto& [key, c] : v.coeffs()) {
    terms.push_back({{"bits", TensorVec::bits_from_key(key, v.n())}, {"coeff", to_json(c)}});
  }
  return {{"n", v.n()}, {"factor_order", kFactorLegend}, {"terms", terms}};
}

TensorVec tensor_from_json(const json& j) {
  TensorVec v(j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    const auto bits = term.at("bits").get<std::string>();
    if (static_cast<int>(bits.size()) != v.n()) throw std::invalid_argument("bitstring length does not match n");
    v.add_term(TensorVec::key_from_bits(bits), ratq_from_json(term.at("coeff")));
  }
  return v;
}

std::string tensor_to_text(const TensorVec& v) {
  std::ostringstream os;
  if (v.is_zero()) os << "  0\n";
  for (const auto& [key, c] : v.coeffs()) {
    os << "  " << (v.n() ? TensorVec::bits_from_key(key, v.n()) : std::string("()")) << "  " << to_text(c) << "\n";
  }
  return os.str();
}

json block_to_json(const BlockVector& b) {
  return {{"path", b.path.steps()}, {"normalization", to_json(b.normalization)}, {"vector", tensor_to_json(b.vec)}};
}

std::string block_to_text(const BlockVector& b) {
  std::ostringstream os;
  os << "path " << (b.path.steps().empty() ? "-" : b.path.steps()) << " " << b.path.heights_string() << "\n";
  os << "normalization [2]^N c_alpha = " << to_bracket_text(b.normalization) << "\n";
  os << "# " << kFactorLegend << "\n";
  os << tensor_to_text(b.vec);
  return os.str();
}

}  // namespace qblocks
