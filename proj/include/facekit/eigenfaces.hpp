#pragma once

#include <filesystem>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

/// Orthonormal face subspace learned from training vectors: the mean face,
/// the leading unit-norm eigenfaces (columns) and their eigenvalues in the
/// 1/M covariance scale, descending.
struct FaceSubspace {
    Vector mean;
    Matrix eigenfaces;   // pixel_count x m_prime, unit columns
    Vector eigenvalues;  // m_prime entries, descending
    int source_count = 0;

    int dimension() const { return static_cast<int>(eigenfaces.cols()); }
    int pixel_count() const { return static_cast<int>(mean.size()); }
};

/// Projection coefficients of one face, with an optional identity label.
struct FeatureVector {
    Vector coefficients;
    int subject_id = 0;  // 0 when unlabeled
};

/// Componentwise arithmetic mean. All vectors must share one length.
Vector compute_mean(const std::vector<Vector>& train);

/// Subtracts the mean from every vector and packs the differences as the
/// columns of an N²×M matrix.
Matrix center(const std::vector<Vector>& train, const Vector& mean);

/// Builds the subspace from M training vectors via the M×M Gram matrix:
/// eigenvectors of AᵀA are lifted through A and normalized to unit length.
/// Eigenvalues below 1e-10 of the largest count as zero; requesting more
/// than the resulting rank throws ReducedRankError carrying that rank.
FaceSubspace build_subspace(const std::vector<Vector>& train, int m_prime);

/// Number of dimensions build_subspace can deliver for this data.
int usable_rank(const std::vector<Vector>& train);

/// coefficients[k] = eigenfaces[k] · (face − mean)
FeatureVector project(const FaceSubspace& subspace, const Vector& face);

/// First `m_prime` components of the subspace. Identical to rebuilding at
/// the smaller dimension, by eigenvalue ordering.
FaceSubspace truncated(const FaceSubspace& subspace, int m_prime);

/// Versioned flat-text persistence, 17 significant digits per value so a
/// save/load cycle is lossless.
void save_subspace(const FaceSubspace& subspace, const std::filesystem::path& path);
FaceSubspace load_subspace(const std::filesystem::path& path);

}  // namespace facekit
