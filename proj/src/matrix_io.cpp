#include "spflag/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spflag/lagrangian.hpp"
#include "spflag/symplectic.hpp"

namespace spflag {

MatrixFile::Kind matrix_kind_from_string(const std::string& s) {
  if (s == "rect") return MatrixFile::Kind::Rect;
  if (s == "symmetric") return MatrixFile::Kind::Symmetric;
  if (s == "symplectic") return MatrixFile::Kind::Symplectic;
  if (s == "frame") return MatrixFile::Kind::Frame;
  throw ValidationError("matrix file: unknown kind tag '" + s + "'");
}

std::string to_string(MatrixFile::Kind kind) {
  switch (kind) {
    case MatrixFile::Kind::Rect: return "rect";
    case MatrixFile::Kind::Symmetric: return "symmetric";
    case MatrixFile::Kind::Symplectic: return "symplectic";
    case MatrixFile::Kind::Frame: return "frame";
  }
  return "rect";
}

namespace {

/// Tokenizes, dropping blank lines and '#' comments.
std::vector<std::string> tokens_of(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  return toks;
}

long parse_int(const std::string& t, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(t, &pos);
  } catch (...) {
    throw ValidationError(std::string("matrix file: expected ") + what + ", got '" + t + "'");
  }
  if (pos != t.size())
    throw ValidationError(std::string("matrix file: expected ") + what + ", got '" + t + "'");
  return v;
}

double parse_double(const std::string& t) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(t, &pos);
  } catch (...) {
    throw ValidationError("matrix file: malformed number '" + t + "'");
  }
  if (pos != t.size()) throw ValidationError("matrix file: malformed number '" + t + "'");
  return v;
}

void validate_kind(const MatrixFile& mf, const TolerancePolicy& tol) {
  const Eigen::MatrixXd& m = mf.data;
  switch (mf.kind) {
    case MatrixFile::Kind::Rect:
      break;
    case MatrixFile::Kind::Symmetric:
      if (m.rows() != m.cols())
        throw ValidationError("matrix file: symmetric matrix must be square");
      if (!is_symmetric_within(m, tol))
        throw ValidationError("matrix file: entries violate symmetry beyond tolerance");
      break;
    case MatrixFile::Kind::Symplectic:
      if (!is_symplectic(m, tol))
        throw ValidationError("matrix file: matrix fails the symplectic membership test");
      break;
    case MatrixFile::Kind::Frame:
      if (!is_lagrangian(m, tol))
        throw ValidationError("matrix file: frame is rank-deficient or not isotropic");
      break;
  }
}

}  // namespace

MatrixFile read_matrix(std::istream& in, const TolerancePolicy& tol) {
  std::vector<std::string> toks = tokens_of(in);
  if (toks.size() < 2) throw ValidationError("matrix file: missing header '<rows> <cols> [kind]'");
  long rows = parse_int(toks[0], "row count");
  long cols = parse_int(toks[1], "column count");
  if (rows < 1 || cols < 1)
    throw ValidationError("matrix file: dimensions must be positive");
  std::size_t at = 2;
  MatrixFile mf;
  if (toks.size() > 2 && !std::isdigit(static_cast<unsigned char>(toks[2][0])) &&
      toks[2][0] != '-' && toks[2][0] != '+' && toks[2][0] != '.') {
    mf.kind = matrix_kind_from_string(toks[2]);
    at = 3;
  }
  std::size_t need = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  if (toks.size() - at != need) {
    std::ostringstream os;
    os << "matrix file: expected " << need << " entries for " << rows << "x" << cols << ", found "
       << (toks.size() - at);
    throw ValidationError(os.str());
  }
  mf.data.resize(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) mf.data(i, j) = parse_double(toks[at++]);
  validate_kind(mf, tol);
  return mf;
}

MatrixFile read_matrix_file(const std::string& path, const TolerancePolicy& tol) {
  std::ifstream in(path);
  if (!in) throw ValidationError("matrix file: cannot open '" + path + "'");
  return read_matrix(in, tol);
}

void write_matrix(std::ostream& out, const MatrixFile& mf) {
  out << mf.data.rows() << " " << mf.data.cols() << " " << to_string(mf.kind) << "\n";
  char buf[64];
  for (Eigen::Index i = 0; i < mf.data.rows(); ++i) {
    for (Eigen::Index j = 0; j < mf.data.cols(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", mf.data(i, j));
      out << (j ? " " : "") << buf;
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const MatrixFile& mf) {
  std::ofstream out(path);
  if (!out) throw ValidationError("matrix file: cannot open '" + path + "' for writing");
  write_matrix(out, mf);
}

}  // namespace spflag
