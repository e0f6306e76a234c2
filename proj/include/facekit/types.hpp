#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace facekit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// A caller broke an operation's precondition (bad dimensions, bad
/// configuration, out-of-range arguments).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input data does not conform to its declared format. The message names
/// the offending byte offset where applicable.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem-level failure (missing path, unreadable or unwritable file).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested more subspace dimensions than the data supports.
class ReducedRankError : public ContractError {
public:
    ReducedRankError(const std::string& msg, int usable_rank)
        : ContractError(msg), usable_rank(usable_rank) {}
    int usable_rank;
};

/// Training produced a non-finite objective.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, int epoch)
        : std::runtime_error(msg), epoch(epoch) {}
    int epoch;
};

}  // namespace facekit
