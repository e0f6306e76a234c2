#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "facekit/classifier_mlp.hpp"
#include "facekit/classifier_nearest.hpp"
#include "facekit/dataset.hpp"

namespace facekit {

struct RecognitionReport {
    std::string classifier;
    int m_prime = 0;
    int correct = 0;
    int total = 0;
    double rate = 0.0;
    std::map<std::pair<int, int>, int> confusion;  // (true, predicted) -> count
};

/// Runs `predict` (raw face vector -> subject id) over the test set and
/// tallies rate and confusion counts.
RecognitionReport evaluate(const std::function<int(const Vector&)>& predict,
                           const std::string& classifier_label, int m_prime,
                           const std::vector<LabeledVector>& test);

RecognitionReport evaluate_nearest(const FaceSubspace& subspace, const Gallery& gallery,
                                   const std::vector<LabeledVector>& test);

RecognitionReport evaluate_mlp(const FaceSubspace& subspace, const MlpNetwork& net,
                               const std::vector<LabeledVector>& test);

/// Minimum-distance recognition rate as a function of subspace dimension.
/// The subspace is built once at max(dims) and truncated per point.
std::vector<std::pair<int, double>> sweep_dimensions(
    const std::vector<LabeledVector>& train, const std::vector<LabeledVector>& test,
    const std::vector<int>& dims);

struct HistogramData {
    std::string label;
    std::vector<double> bin_edges;  // bins + 1 entries, strictly increasing
    std::vector<int> counts;
};

/// Equal-width bins spanning [min, max]; the maximum lands in the last bin.
/// A degenerate span (all values equal) is widened to 1.
HistogramData histogram(const std::vector<double>& values, int bins,
                        const std::string& label = {});

struct ScoreSeries {
    std::string label;
    std::vector<double> values;
};

/// Raw comparison scores behind the genuine/impostor analysis: euclidean
/// distances from each probe to same-subject models (all five and nearest
/// of five) and to other-subject models; with a network, its outputs at
/// the genuine and at the impostor positions.
std::vector<ScoreSeries> genuine_impostor_values(const Gallery& gallery,
                                                 const FaceSubspace& subspace,
                                                 const std::vector<LabeledVector>& test,
                                                 const MlpNetwork* net = nullptr);

/// The same series binned with the default 30 bins.
std::vector<HistogramData> genuine_impostor_series(const Gallery& gallery,
                                                   const FaceSubspace& subspace,
                                                   const std::vector<LabeledVector>& test,
                                                   const MlpNetwork* net = nullptr);

void export_csv(const RecognitionReport& report, const std::filesystem::path& path);
void export_csv(const HistogramData& histogram, const std::filesystem::path& path);
void export_csv(const std::vector<std::pair<int, double>>& sweep,
                const std::filesystem::path& path);

/// Inverse of export_csv for reports.
RecognitionReport parse_report_csv(const std::filesystem::path& path);

}  // namespace facekit
