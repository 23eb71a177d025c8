#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>

namespace qtree {

using BigInt = boost::multiprecision::cpp_int;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact integer matrix; rows and columns are indexed by edge labels in
/// label-universe order.
using IntMatrix = DenseMatrix<BigInt>;

/// Small signed matrix as produced by chord interlacement.
using SignMatrix = Eigen::MatrixXi;

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace qtree
