#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>
#include <vector>

#include "facekit/eigenfaces.hpp"
#include "facekit/types.hpp"

namespace facekit {

/// Feedforward perceptron with a symmetric sigmoid (tanh) on every layer,
/// matching the ±1 target encoding. Inputs pass through a stored affine
/// standardization before the first layer; init_network leaves it at
/// identity and the training driver fits it to the training set.
struct MlpNetwork {
    std::vector<int> layer_sizes;
    std::vector<Matrix> weights;  // per layer, fan_out x fan_in
    std::vector<Vector> biases;   // per layer, fan_out
    Vector input_shift;
    Vector input_scale;

    int input_size() const { return layer_sizes.front(); }
    int output_size() const { return layer_sizes.back(); }
    /// Total number of weights plus biases.
    int parameter_count() const;
};

struct EarlyStopping {
    int patience = 50;  // epochs without validation improvement before stopping
};

struct TrainConfig {
    int epochs = 4000;
    double initial_learning_rate = 0.01;
    double momentum = 0.9;
    double lr_increase = 1.05;
    double lr_decrease = 0.7;
    double max_error_growth = 1.04;
    double gamma = 0.9;  // objective = gamma·MSE + (1−gamma)·mean squared weight
    std::uint64_t seed = 0;
    int multi_starts = 5;
    std::optional<EarlyStopping> early_stopping;
};

struct TrainReport {
    std::vector<double> objective_trace;      // objective after each epoch
    std::vector<double> learning_rate_trace;  // rate in effect during each epoch
    std::vector<double> validation_trace;     // per-epoch validation MSE, if any
    int stop_epoch = 0;                       // epochs actually run
    int selected_start = 0;                   // winning start index (multi-start)
};

using TrainingPair = std::pair<Vector, Vector>;  // (input, target)

/// Target encoding: +1 at the genuine subject's position, −1 elsewhere.
Vector make_targets(int subject_id, int num_subjects);

/// Weights uniform on [−1/√fan_in, +1/√fan_in], biases zero; identical
/// output for identical seed on any platform.
MlpNetwork init_network(const std::vector<int>& layer_sizes, std::uint64_t seed);

/// Standardizes, then applies the affine/tanh chain layer by layer.
Vector forward(const MlpNetwork& net, const Vector& x);

/// Mean squared componentwise error.
double mse(const Vector& targets, const Vector& outputs);

/// gamma·mse_value + (1−gamma)·(Σ wⱼ²)/n where n counts weights and biases
/// but the sum runs over weights only.
double msereg(double gamma, double mse_value, const MlpNetwork& net);

struct Gradients {
    std::vector<Matrix> weights;
    std::vector<Vector> biases;
};

/// Analytic gradient of the regularized objective
/// gamma·(mean over batch of MSE) + (1−gamma)·(Σ wⱼ²)/n over one batch.
Gradients gradients(const MlpNetwork& net, const std::vector<TrainingPair>& batch,
                    double gamma);

/// Full-batch gradient descent with momentum and an adaptive learning rate.
/// An epoch whose objective grows beyond max_error_growth is rejected
/// (parameters restored, velocity cleared, rate decreased); an epoch that
/// improves the objective increases the rate. Throws DivergenceError with
/// the epoch number if the objective turns non-finite.
std::pair<MlpNetwork, TrainReport> train(MlpNetwork net,
                                         const std::vector<TrainingPair>& train_data,
                                         const TrainConfig& config);

/// As train, but tracks the validation MSE each epoch, stops after
/// `patience` epochs without improvement, and returns the parameters from
/// the best validation epoch.
std::pair<MlpNetwork, TrainReport> train_early_stopping(
    MlpNetwork net, const std::vector<TrainingPair>& train_data,
    const std::vector<TrainingPair>& validation_data, const TrainConfig& config);

/// Trains from config.multi_starts seeded initializations (seed, seed+1, …)
/// and keeps the start with the lowest final training objective. All starts
/// share `standardization`, fitted by the caller from the training inputs.
std::pair<MlpNetwork, TrainReport> train_multistart(
    const std::vector<int>& layer_sizes, const std::vector<TrainingPair>& train_data,
    const TrainConfig& config,
    const std::vector<TrainingPair>& validation_data = {});

/// Per-component mean/stddev over a feature set, for MlpNetwork's input
/// standardization. Components with zero spread get scale 1.
std::pair<Vector, Vector> fit_standardization(const std::vector<TrainingPair>& data);

struct Classification {
    int subject_id = 0;
    Vector scores;
};

/// Subject = position of the maximal output (ties to the lowest index);
/// the full score vector is returned for histogram export.
Classification classify(const MlpNetwork& net, const FeatureVector& probe);

void save_network(const MlpNetwork& net, double gamma, const std::filesystem::path& path);
std::pair<MlpNetwork, double> load_network(const std::filesystem::path& path);

}  // namespace facekit
