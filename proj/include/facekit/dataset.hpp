#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <span>
#include <vector>

#include "facekit/types.hpp"

namespace facekit {

/// One grayscale face with its identity label and per-subject sample index.
/// Pixels are row-major, top-left first, always rescaled to [0, 255].
struct FaceImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;
    int subject_id = 0;    // 1..S, 0 when unlabeled
    int sample_index = 0;  // 1..10, 0 when unlabeled
};

enum class PgmFormat { Binary, Ascii };  // P5 / P2

/// Parses a PGM image (binary P5 or ASCII P2). Header comments are skipped.
/// Intensities are rescaled to [0, 255] (round half up) when maxval != 255.
/// Throws FormatError naming the byte offset on malformed input, with
/// expected-vs-actual counts on a truncated payload.
FaceImage load_pgm(std::span<const std::uint8_t> bytes);

/// Reads and parses one PGM file. Throws IoError if unreadable.
FaceImage load_pgm_file(const std::filesystem::path& path);

/// Serializes to PGM with maxval 255. P5 uses the single-whitespace header
/// convention (one '\n' after maxval, then the raw payload).
std::vector<std::uint8_t> encode_pgm(const FaceImage& image, PgmFormat format);

/// Loads a `<root>/s<k>/<j>.pgm` directory tree. Subject directories and
/// sample files must be numbered contiguously from 1; a gap is reported as
/// a listing error naming the missing path. All images must share one size.
/// Result is sorted by (subject_id, sample_index).
std::vector<FaceImage> scan_orl_layout(const std::filesystem::path& root);

/// Flattens an image to a real vector, row-major, intensities kept as-is.
Vector vectorize(const FaceImage& image);

/// Inverse of vectorize given the original dimensions.
FaceImage reshape(const Vector& values, int width, int height);

/// A flattened face with its label, as routed into a split.
struct LabeledVector {
    Vector values;
    int subject_id = 0;
    int sample_index = 0;
};

struct DatasetSplit {
    std::vector<LabeledVector> train;
    std::vector<LabeledVector> test;
    std::vector<LabeledVector> validation;
};

/// Routes images by sample index into train/test/validation parts. The index
/// sets must be pairwise disjoint subsets of 1..10; each part is ordered by
/// (subject_id, sample_index).
DatasetSplit make_split(const std::vector<FaceImage>& images,
                        const std::set<int>& train_samples,
                        const std::set<int>& test_samples,
                        const std::set<int>& validation_samples = {});

}  // namespace facekit
