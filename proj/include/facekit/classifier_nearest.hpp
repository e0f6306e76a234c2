#pragma once

#include <filesystem>
#include <vector>

#include "facekit/dataset.hpp"
#include "facekit/eigenfaces.hpp"

namespace facekit {

/// Enrolled models for minimum-distance identification: one labeled
/// coefficient vector per training face.
struct Gallery {
    std::vector<FeatureVector> models;
    int m_prime = 0;
};

/// Projection used by the classical matcher. Coefficient k is the unit-basis
/// coefficient scaled by √(M·λₖ), the spread of the training set along
/// eigenface k. This equals projecting onto the unnormalized lifted basis,
/// so the euclidean distance weights each axis by its energy.
FeatureVector matching_projection(const FaceSubspace& subspace, const Vector& face);

/// One model per training face (matching_projection plus label), input order
/// preserved.
Gallery enroll(const FaceSubspace& subspace, const std::vector<LabeledVector>& train);

struct Identification {
    int subject_id = 0;
    double distance = 0.0;
};

/// Label of the model at minimal euclidean distance from the probe. Ties
/// resolve to the lowest model index. Throws ContractError on an empty
/// gallery or a probe of the wrong length.
Identification identify(const Gallery& gallery, const FeatureVector& probe);

/// Distances from the probe to every model, in gallery order.
std::vector<Identification> all_distances(const Gallery& gallery, const FeatureVector& probe);

void save_gallery(const Gallery& gallery, const std::filesystem::path& path);
Gallery load_gallery(const std::filesystem::path& path);

}  // namespace facekit
