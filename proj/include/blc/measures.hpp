#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "blc/statevec.hpp"

namespace blc::measures {

/// Labelled continuer outcomes plus the evidence one measure family needs:
/// nothing (flat), copy counts, complex amplitudes, or entropies in bits.
struct ContinuerSet {
    std::vector<std::string> labels;
    std::variant<std::monostate, std::vector<std::uint64_t>, std::vector<Complex>,
                 std::vector<double>>
        evidence;

    std::size_t size() const { return labels.size(); }
};

ContinuerSet flat_set(std::vector<std::string> labels);
ContinuerSet count_set(std::vector<std::string> labels, std::vector<std::uint64_t> counts);
ContinuerSet amplitude_set(std::vector<std::string> labels, std::vector<Complex> amplitudes);
ContinuerSet entropy_set(std::vector<std::string> labels, std::vector<double> entropy_bits);

/// Normalized probabilities over one ContinuerSet, plus the log2 of each
/// unnormalized weight (the branch-dependent part of the measure).
struct MeasureResult {
    std::string measure_name;
    std::vector<double> probabilities;
    std::vector<double> log_weights;
};

/// 1/n per continuer.
MeasureResult flat_measure(const ContinuerSet& set);

/// count_i / sum of counts.
MeasureResult copy_count_measure(const ContinuerSet& set);

/// |a_i|^2 / sum |a_k|^2.
MeasureResult born_measure(const ContinuerSet& set);

/// 2^-H_i / sum 2^-H_k, evaluated in the log domain by shifting out min H;
/// absolute entropies and deltas against a common base give identical
/// results.
MeasureResult algorithmic_measure(const ContinuerSet& set);

/// Every measure whose evidence the set carries (flat always).
std::vector<MeasureResult> all_measures(const ContinuerSet& set);

double total_variation(const MeasureResult& a, const MeasureResult& b);

}  // namespace blc::measures
