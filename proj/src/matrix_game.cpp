#include "zsum/matrix_game.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zsum {

MatrixGame negated_transpose(const MatrixGame& g) {
  MatrixGame out;
  out.payoffs.assign(g.cols(), std::vector<Rational>(g.rows()));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) out.payoffs[j][i] = -g.payoffs[i][j];
  return out;
}

MatrixGame read_matrix_game(std::istream& in) {
  long long m = 0, n = 0;
  if (!(in >> m >> n)) throw std::runtime_error("matrix game: missing dimension header");
  if (m < 1 || n < 1) throw std::runtime_error("matrix game: dimensions must be at least 1x1");

  MatrixGame g;
  g.payoffs.assign(static_cast<std::size_t>(m),
                   std::vector<Rational>(static_cast<std::size_t>(n)));
  for (long long i = 0; i < m; ++i) {
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) {
        std::ostringstream ss;
        ss << "matrix game: expected " << m * n << " entries, input ended early";
        throw std::runtime_error(ss.str());
      }
      try {
        g.payoffs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            Rational::from_string(tok);
      } catch (const std::exception& e) {
        std::ostringstream ss;
        ss << "matrix game: bad entry at row " << i + 1 << ", column " << j + 1 << ": "
           << e.what();
        throw std::runtime_error(ss.str());
      }
    }
  }
  return g;
}

MatrixGame read_matrix_game(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_game(in);
}

void write_matrix_game(std::ostream& out, const MatrixGame& g) {
  out << g.rows() << " " << g.cols() << "\n";
  for (const auto& row : g.payoffs) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << " ";
      out << row[j];
    }
    out << "\n";
  }
}

}  // namespace zsum
