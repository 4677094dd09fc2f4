#include "hopfpar/io.hpp"

#include <fstream>
#include <sstream>

namespace hopfpar {

namespace {

void write_matrix(std::ostream& os, const std::string& name, const Matrix& m) {
  os << name << " " << m.rows() << " " << m.cols() << "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m.at(i, j).str();
    os << "\n";
  }
}

struct Reader {
  std::istringstream in;
  std::size_t line_no = 0;
  explicit Reader(const std::string& text) : in(text) {}

  std::string next_line() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty()) return line;
    }
    throw ParseError(line_no, "unexpected end of input");
  }

  Matrix read_matrix(const std::string& name, const FieldSpec& f) {
    std::istringstream head(next_line());
    std::string tag;
    std::size_t rows, cols;
    if (!(head >> tag >> rows >> cols) || tag != name)
      throw ParseError(line_no, "expected '" + name + " <rows> <cols>'");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::istringstream row(next_line());
      for (std::size_t j = 0; j < cols; ++j) {
        std::string tok;
        if (!(row >> tok))
          throw ParseError(line_no, "row too short in block '" + name + "'");
        try {
          m.at(i, j) = Scalar::parse(f, tok);
        } catch (const std::exception& e) {
          throw ParseError(line_no, "bad scalar '" + tok + "': " + e.what());
        }
      }
      std::string extra;
      if (row >> extra)
        throw ParseError(line_no, "row too long in block '" + name + "'");
    }
    return m;
  }
};

}  // namespace

std::string write_hopf(const HopfData& h) {
  std::ostringstream os;
  os << "hopfpar-hopf v1\n";
  os << "field " << h.field().characteristic << "\n";
  os << "dim " << h.dim() << "\n";
  os << "labels";
  for (std::size_t i = 0; i < h.dim(); ++i) os << " " << h.label(i);
  os << "\n";
  write_matrix(os, "mult", h.mult());
  write_matrix(os, "unit", h.unit());
  write_matrix(os, "comult", h.comult());
  write_matrix(os, "counit", h.counit());
  write_matrix(os, "antipode", h.antipode);
  if (h.antipode_inverse)
    write_matrix(os, "antipode-inverse", *h.antipode_inverse);
  os << "end\n";
  return os.str();
}

HopfData read_hopf(const std::string& text) {
  Reader r(text);
  if (r.next_line() != "hopfpar-hopf v1")
    throw ParseError(r.line_no, "missing header 'hopfpar-hopf v1'");
  std::istringstream fl(r.next_line());
  std::string tag;
  std::uint64_t ch;
  if (!(fl >> tag >> ch) || tag != "field")
    throw ParseError(r.line_no, "expected 'field <characteristic>'");
  FieldSpec f;
  try {
    f = FieldSpec(ch);
  } catch (const std::exception& e) {
    throw ParseError(r.line_no, e.what());
  }
  std::istringstream dl(r.next_line());
  std::size_t dim;
  if (!(dl >> tag >> dim) || tag != "dim")
    throw ParseError(r.line_no, "expected 'dim <n>'");
  std::istringstream ll(r.next_line());
  if (!(ll >> tag) || tag != "labels")
    throw ParseError(r.line_no, "expected 'labels ...'");
  std::vector<std::string> labels;
  std::string lab;
  while (ll >> lab) labels.push_back(lab);
  if (labels.size() != dim)
    throw ParseError(r.line_no, "label count does not match dim");

  HopfData h;
  h.algebra.field = f;
  h.algebra.dim = dim;
  h.algebra.labels = labels;
  h.coalgebra.field = f;
  h.coalgebra.dim = dim;
  h.coalgebra.labels = labels;
  h.algebra.mult = r.read_matrix("mult", f);
  h.algebra.unit = r.read_matrix("unit", f);
  h.coalgebra.comult = r.read_matrix("comult", f);
  h.coalgebra.counit = r.read_matrix("counit", f);
  h.antipode = r.read_matrix("antipode", f);
  std::string tail = r.next_line();
  if (tail.rfind("antipode-inverse", 0) == 0) {
    // rewind management: re-parse the block using the already-consumed header
    std::istringstream head(tail);
    std::string name;
    std::size_t rows, cols;
    if (!(head >> name >> rows >> cols))
      throw ParseError(r.line_no, "bad antipode-inverse header");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      std::istringstream row(r.next_line());
      for (std::size_t j = 0; j < cols; ++j) {
        std::string tok;
        if (!(row >> tok)) throw ParseError(r.line_no, "row too short");
        m.at(i, j) = Scalar::parse(f, tok);
      }
    }
    h.antipode_inverse = m;
    tail = r.next_line();
  }
  if (tail != "end") throw ParseError(r.line_no, "expected 'end'");
  if (h.mult().rows() != dim || h.mult().cols() != dim * dim ||
      h.unit().rows() != dim || h.comult().rows() != dim * dim ||
      h.comult().cols() != dim || h.counit().cols() != dim ||
      h.antipode.rows() != dim || h.antipode.cols() != dim)
    throw ParseError(r.line_no, "block shapes inconsistent with dim");
  return h;
}

void write_hopf_file(const HopfData& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << write_hopf(h);
}

HopfData read_hopf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_hopf(buf.str());
}

}  // namespace hopfpar
