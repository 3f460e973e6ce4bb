#include "blc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace blc::measures {

namespace {

void check_labels(const ContinuerSet& set, std::size_t evidence_size) {
    if (set.labels.empty()) throw std::invalid_argument("continuer set is empty");
    if (set.labels.size() != evidence_size) {
        throw std::invalid_argument("evidence size does not match label count");
    }
}

}  // namespace

ContinuerSet flat_set(std::vector<std::string> labels) {
    return ContinuerSet{std::move(labels), std::monostate{}};
}

ContinuerSet count_set(std::vector<std::string> labels, std::vector<std::uint64_t> counts) {
    return ContinuerSet{std::move(labels), std::move(counts)};
}

ContinuerSet amplitude_set(std::vector<std::string> labels, std::vector<Complex> amplitudes) {
    return ContinuerSet{std::move(labels), std::move(amplitudes)};
}

ContinuerSet entropy_set(std::vector<std::string> labels, std::vector<double> entropy_bits) {
    return ContinuerSet{std::move(labels), std::move(entropy_bits)};
}

MeasureResult flat_measure(const ContinuerSet& set) {
    if (set.labels.empty()) throw std::invalid_argument("continuer set is empty");
    const std::size_t n = set.size();
    MeasureResult out;
    out.measure_name = "flat";
    out.probabilities.assign(n, 1.0 / static_cast<double>(n));
    out.log_weights.assign(n, 0.0);
    return out;
}

MeasureResult copy_count_measure(const ContinuerSet& set) {
    const auto* counts = std::get_if<std::vector<std::uint64_t>>(&set.evidence);
    if (counts == nullptr) throw std::invalid_argument("continuer set carries no copy counts");
    check_labels(set, counts->size());

    std::uint64_t total = 0;
    for (std::uint64_t c : *counts) {
        if (c == 0) throw std::invalid_argument("copy counts must be positive");
        total += c;
    }

    MeasureResult out;
    out.measure_name = "copy_count";
    out.probabilities.reserve(counts->size());
    out.log_weights.reserve(counts->size());
    for (std::uint64_t c : *counts) {
        out.probabilities.push_back(static_cast<double>(c) / static_cast<double>(total));
        out.log_weights.push_back(std::log2(static_cast<double>(c)));
    }
    return out;
}

MeasureResult born_measure(const ContinuerSet& set) {
    const auto* amps = std::get_if<std::vector<Complex>>(&set.evidence);
    if (amps == nullptr) throw std::invalid_argument("continuer set carries no amplitudes");
    check_labels(set, amps->size());

    double total = 0.0;
    for (const Complex& a : *amps) total += std::norm(a);
    if (total == 0.0) {
        throw std::invalid_argument("all amplitudes are zero: no continuer has support");
    }

    MeasureResult out;
    out.measure_name = "born";
    out.probabilities.reserve(amps->size());
    out.log_weights.reserve(amps->size());
    for (const Complex& a : *amps) {
        const double w = std::norm(a);
        out.probabilities.push_back(w / total);
        out.log_weights.push_back(w == 0.0 ? -std::numeric_limits<double>::infinity()
                                           : std::log2(w));
    }
    return out;
}

MeasureResult algorithmic_measure(const ContinuerSet& set) {
    const auto* entropies = std::get_if<std::vector<double>>(&set.evidence);
    if (entropies == nullptr) throw std::invalid_argument("continuer set carries no entropies");
    check_labels(set, entropies->size());
    for (double h : *entropies) {
        if (!std::isfinite(h) || h < 0.0) {
            throw std::invalid_argument("entropies must be finite and >= 0 bits");
        }
    }

    // Shift by min H before exponentiating; 2^-H underflows for realistic
    // bit counts and the measure is shift-invariant anyway.
    const double h_min = *std::min_element(entropies->begin(), entropies->end());

    MeasureResult out;
    out.measure_name = "algorithmic";
    out.probabilities.reserve(entropies->size());
    out.log_weights.reserve(entropies->size());
    double total = 0.0;
    for (double h : *entropies) {
        const double w = std::exp2(-(h - h_min));
        out.probabilities.push_back(w);
        out.log_weights.push_back(-h);
        total += w;
    }
    for (double& p : out.probabilities) p /= total;
    return out;
}

std::vector<MeasureResult> all_measures(const ContinuerSet& set) {
    std::vector<MeasureResult> out;
    out.push_back(flat_measure(set));
    if (std::holds_alternative<std::vector<std::uint64_t>>(set.evidence)) {
        out.push_back(copy_count_measure(set));
    } else if (std::holds_alternative<std::vector<Complex>>(set.evidence)) {
        out.push_back(born_measure(set));
    } else if (std::holds_alternative<std::vector<double>>(set.evidence)) {
        out.push_back(algorithmic_measure(set));
    }
    return out;
}

double total_variation(const MeasureResult& a, const MeasureResult& b) {
    if (a.probabilities.size() != b.probabilities.size()) {
        throw std::invalid_argument("total variation needs equal-length distributions");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < a.probabilities.size(); ++i) {
        sum += std::abs(a.probabilities[i] - b.probabilities[i]);
    }
    return 0.5 * sum;
}

}  // namespace blc::measures
