#ifndef CKGEOM_TEXT_IO_HPP
#define CKGEOM_TEXT_IO_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ckgeom/errors.hpp"

namespace ckgeom {

/// 12 significant digits with trailing zeros kept, the wire format of all
/// numeric output.
std::string format_number(double v);

/// Matrices travel as rows separated by ';' with ',' between entries.
Eigen::MatrixXd parse_matrix(const std::string& text);
std::string format_matrix(const Eigen::MatrixXd& m);

/// Quadric signature tokens: "+", "-", "0" (also "+1"/"-1").
std::vector<int> parse_signs(const std::string& text);

}  // namespace ckgeom

#endif  // CKGEOM_TEXT_IO_HPP
