#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "blc/codec.hpp"
#include "blc/measures.hpp"
#include "blc/statevec.hpp"

namespace blc::scenario {

struct Room {
    std::string label;
    std::uint64_t count = 1;
};

/// One quantum outcome; its amplitude is the coherent sum of the paths.
struct Outcome {
    std::string label;
    std::vector<Complex> paths;
};

struct FrequencyComponent {
    std::size_t k = 0;
    Complex amplitude{0.0, 0.0};
};

/// Band-limited signal given by its nonzero frequency components.
struct SignalSpec {
    std::size_t dimension = 0;
    std::vector<FrequencyComponent> components;
};

/// Continuer signal derived from the base: extra frequency components, or a
/// fresh seeded-noise signal (a maverick), or the base itself if empty.
struct Perturbation {
    std::string label;
    std::vector<FrequencyComponent> add_components;
    std::optional<std::uint64_t> noise_seed;
    double noise_scale = 1.0;
};

struct Scenario {
    enum class Kind { Replicator, Quantum, Codec };

    Kind kind = Kind::Replicator;
    std::string name;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;  // 0 disables Monte Carlo sampling
    std::string config_hash;   // set when loaded from a file

    // replicator
    std::vector<Room> rooms;

    // quantum: either direct outcomes, or an explicit psi + continuer states
    std::vector<Outcome> outcomes;
    std::optional<StateVector> psi;
    std::vector<std::string> continuer_labels;
    std::vector<StateVector> continuer_states;

    // codec
    SignalSpec base_signal;
    std::vector<Perturbation> perturbations;
    double epsilon = codec::kDefaultDistortionBudget;
};

/// ContinuerSet plus the side data a kind produces while building.
struct BuildResult {
    measures::ContinuerSet set;
    bool dead_branch_present = false;

    // codec only
    double base_entropy_bits = 0.0;
    std::vector<double> entropy_bits;
    std::vector<double> delta_h_bits;
    std::vector<double> amplitude_abs;  // |<m_i|m>| / (|m_i| |m|)
    std::vector<StateVector> continuer_signals;
};

BuildResult build_replicator(const Scenario& s);
BuildResult build_quantum(const Scenario& s);
BuildResult build_codec(const Scenario& s);
BuildResult build(const Scenario& s);

/// Realizes a SignalSpec as a state vector (inverse transform of its sparse
/// spectrum).
StateVector render_signal(const SignalSpec& spec);

/// Seeded i.i.d. sampling by CDF inversion over mt19937_64 (53-bit uniforms).
std::vector<std::uint64_t> monte_carlo_counts(const measures::MeasureResult& measure,
                                              std::uint64_t trials, std::uint64_t seed);
std::vector<double> monte_carlo(const measures::MeasureResult& measure, std::uint64_t trials,
                                std::uint64_t seed);

/// Spearman rank correlation with average ranks for ties.
double spearman_rank_correlation(std::span<const double> a, std::span<const double> b);

struct MonteCarloBlock {
    std::string measure_name;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> counts;
    std::vector<double> frequencies;
};

struct TotalVariationEntry {
    std::string measure_a;
    std::string measure_b;
    double distance = 0.0;
};

struct ComparisonReport {
    std::string scenario_name;
    Scenario::Kind kind = Scenario::Kind::Replicator;
    std::string config_hash;
    std::uint64_t seed = 0;
    std::vector<std::string> labels;
    std::vector<measures::MeasureResult> measures;
    std::vector<TotalVariationEntry> total_variation;
    bool dead_branch_present = false;

    // codec extras
    std::optional<double> spearman_amp_vs_neg_delta_h;
    std::vector<double> entropy_bits;
    std::vector<double> delta_h_bits;
    std::vector<double> amplitude_abs;
    std::vector<double> born_from_amplitudes;  // normalized |a_i|^2
    std::optional<double> max_gap_born_vs_algorithmic;
    double base_entropy_bits = 0.0;

    std::optional<MonteCarloBlock> monte_carlo;
};

/// Runs every measure the scenario's evidence supports and the comparisons
/// between them.
ComparisonReport compare(const Scenario& s);

Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

nlohmann::json report_to_json(const ComparisonReport& report,
                              std::optional<std::string> timestamp = {});

const char* kind_name(Scenario::Kind kind);

}  // namespace blc::scenario
