#include "ckgeom/text_io.hpp"

#include <cstdio>
#include <sstream>

namespace ckgeom {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%#.12g", v);
  return buf;
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
  const std::vector<std::string> rows = split(text, ';');
  if (rows.empty()) throw ParseError("empty matrix");
  std::vector<std::vector<double>> vals;
  for (const std::string& row : rows) {
    std::vector<double> r;
    for (const std::string& tok : split(row, ',')) {
      const std::string t = trim(tok);
      try {
        size_t used = 0;
        r.push_back(std::stod(t, &used));
        if (used != t.size()) throw ParseError("trailing characters in number '" + t + "'");
      } catch (const ParseError&) {
        throw;
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + t + "'");
      }
    }
    if (r.empty()) throw ParseError("empty matrix row");
    if (!vals.empty() && r.size() != vals.front().size())
      throw ParseError("ragged matrix rows");
    vals.push_back(std::move(r));
  }
  Eigen::MatrixXd m(vals.size(), vals.front().size());
  for (size_t i = 0; i < vals.size(); ++i)
    for (size_t j = 0; j < vals.front().size(); ++j) m(i, j) = vals[i][j];
  return m;
}

std::string format_matrix(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += format_number(m(i, j));
    }
  }
  return out;
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split(text, ',')) {
    const std::string t = trim(tok);
    if (t == "+" || t == "+1" || t == "1")
      out.push_back(1);
    else if (t == "-" || t == "-1")
      out.push_back(-1);
    else if (t == "0")
      out.push_back(0);
    else
      throw ParseError("bad quadric sign '" + t + "'");
  }
  if (out.empty()) throw ParseError("empty quadric signature");
  return out;
}

}  // namespace ckgeom
