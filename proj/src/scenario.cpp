#include "blc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "blc/dft.hpp"
#include "blc/rng.hpp"
#include "blc/version.hpp"

namespace blc::scenario {

namespace {

Complex parse_complex(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("expected a [re, im] pair, got: " + j.dump());
    }
    return Complex{j[0].get<double>(), j[1].get<double>()};
}

std::string fnv1a_hex(std::span<const char> bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : bytes) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

nlohmann::json doubles_to_json(const std::vector<double>& values) {
    nlohmann::json arr = nlohmann::json::array();
    for (double v : values) {
        if (std::isfinite(v)) {
            arr.push_back(v);
        } else {
            arr.push_back(nullptr);  // -inf log weights (zero-amplitude branches)
        }
    }
    return arr;
}

}  // namespace

const char* kind_name(Scenario::Kind kind) {
    switch (kind) {
        case Scenario::Kind::Replicator: return "replicator";
        case Scenario::Kind::Quantum: return "quantum";
        case Scenario::Kind::Codec: return "codec";
    }
    return "unknown";
}

BuildResult build_replicator(const Scenario& s) {
    if (s.rooms.empty()) throw std::invalid_argument("replicator scenario has no rooms");

    // Rooms with identical experience labels are one continuer; the copies
    // accumulate. First-appearance order is kept.
    std::vector<std::string> labels;
    std::vector<std::uint64_t> counts;
    for (const Room& room : s.rooms) {
        if (room.count == 0) throw std::invalid_argument("room count must be positive");
        const auto it = std::find(labels.begin(), labels.end(), room.label);
        if (it == labels.end()) {
            labels.push_back(room.label);
            counts.push_back(room.count);
        } else {
            counts[static_cast<std::size_t>(it - labels.begin())] += room.count;
        }
    }

    BuildResult out;
    out.set = measures::count_set(std::move(labels), std::move(counts));
    return out;
}

BuildResult build_quantum(const Scenario& s) {
    BuildResult out;
    if (s.psi) {
        const BranchDecomposition d = decompose(*s.psi, s.continuer_states);
        std::vector<std::string> labels = s.continuer_labels;
        if (labels.empty()) {
            for (std::size_t i = 0; i < s.continuer_states.size(); ++i) {
                labels.push_back("continuer_" + std::to_string(i));
            }
        }
        if (labels.size() != s.continuer_states.size()) {
            throw std::invalid_argument("continuer label count does not match state count");
        }
        std::vector<Complex> amps = d.coefficients;
        if (d.dead_branch) {
            labels.push_back("dead");
            amps.push_back(d.dead_coefficient);
            out.dead_branch_present = true;
        }
        out.set = measures::amplitude_set(std::move(labels), std::move(amps));
        return out;
    }

    if (s.outcomes.empty()) {
        throw std::invalid_argument("quantum scenario needs outcomes or an explicit state");
    }
    std::vector<std::string> labels;
    std::vector<Complex> amps;
    for (const Outcome& o : s.outcomes) {
        if (o.paths.empty()) {
            throw std::invalid_argument("outcome '" + o.label + "' has no paths");
        }
        // coherent sum before any norm-squaring
        Complex total{0.0, 0.0};
        for (const Complex& p : o.paths) total += p;
        labels.push_back(o.label);
        amps.push_back(total);
    }
    out.set = measures::amplitude_set(std::move(labels), std::move(amps));
    return out;
}

StateVector render_signal(const SignalSpec& spec) {
    if (spec.dimension == 0) throw std::invalid_argument("signal dimension must be >= 1");
    std::vector<Complex> spectrum(spec.dimension, Complex{0.0, 0.0});
    for (const FrequencyComponent& c : spec.components) {
        if (c.k >= spec.dimension) {
            throw std::invalid_argument("frequency index " + std::to_string(c.k) +
                                        " outside dimension " + std::to_string(spec.dimension));
        }
        spectrum[c.k] += c.amplitude;
    }
    return StateVector(dft::inverse(spectrum, spec.dimension));
}

BuildResult build_codec(const Scenario& s) {
    if (s.perturbations.empty()) {
        throw std::invalid_argument("codec scenario has no perturbations");
    }
    const StateVector base = render_signal(s.base_signal);
    const std::size_t n = base.dimension();

    BuildResult out;
    out.base_entropy_bits =
        static_cast<double>(codec::minimal_encoding(base, s.epsilon).stream.bit_length);

    std::vector<std::string> labels;
    for (const Perturbation& p : s.perturbations) {
        StateVector continuer;
        if (p.noise_seed) {
            SeededRng rng(*p.noise_seed);
            continuer = StateVector::zeros(n);
            for (Complex& v : continuer.amplitudes) {
                v = p.noise_scale * Complex{rng.gaussian(), rng.gaussian()} /
                    std::sqrt(2.0 * static_cast<double>(n));
            }
        } else {
            SignalSpec spec = s.base_signal;
            spec.components.insert(spec.components.end(), p.add_components.begin(),
                                   p.add_components.end());
            continuer = render_signal(spec);
        }

        const double h = static_cast<double>(
            codec::minimal_encoding(continuer, s.epsilon).stream.bit_length);
        const double denom = continuer.norm() * base.norm();
        const Complex overlap = inner_product(continuer, base);

        labels.push_back(p.label);
        out.entropy_bits.push_back(h);
        out.delta_h_bits.push_back(h - out.base_entropy_bits);
        out.amplitude_abs.push_back(denom == 0.0 ? 0.0 : std::abs(overlap) / denom);
        out.continuer_signals.push_back(std::move(continuer));
    }

    // perturbations must name and produce distinct continuers
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            if (labels[i] == labels[j]) {
                throw std::invalid_argument("duplicate perturbation label '" + labels[i] + "'");
            }
            double dist = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                dist += std::norm(out.continuer_signals[i].amplitudes[k] -
                                  out.continuer_signals[j].amplitudes[k]);
            }
            if (dist == 0.0) {
                throw std::invalid_argument("perturbations '" + labels[i] + "' and '" +
                                            labels[j] + "' yield identical signals");
            }
        }
    }

    out.set = measures::entropy_set(std::move(labels), out.entropy_bits);
    return out;
}

BuildResult build(const Scenario& s) {
    switch (s.kind) {
        case Scenario::Kind::Replicator: return build_replicator(s);
        case Scenario::Kind::Quantum: return build_quantum(s);
        case Scenario::Kind::Codec: return build_codec(s);
    }
    throw std::invalid_argument("unknown scenario kind");
}

std::vector<std::uint64_t> monte_carlo_counts(const measures::MeasureResult& measure,
                                              std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    const std::vector<double>& p = measure.probabilities;
    std::vector<std::uint64_t> counts(p.size(), 0);
    SeededRng rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const double u = rng.uniform01();
        double cumulative = 0.0;
        std::size_t pick = p.size() - 1;
        for (std::size_t i = 0; i < p.size(); ++i) {
            cumulative += p[i];
            if (u < cumulative) {
                pick = i;
                break;
            }
        }
        ++counts[pick];
    }
    return counts;
}

std::vector<double> monte_carlo(const measures::MeasureResult& measure, std::uint64_t trials,
                                std::uint64_t seed) {
    const std::vector<std::uint64_t> counts = monte_carlo_counts(measure, trials, seed);
    std::vector<double> freq(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i) {
        freq[i] = static_cast<double>(counts[i]) / static_cast<double>(trials);
    }
    return freq;
}

namespace {

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double shared = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double spearman_rank_correlation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size() || a.size() < 2) {
        throw std::invalid_argument("rank correlation needs two equal series of length >= 2");
    }
    const std::vector<double> ra = average_ranks(a);
    const std::vector<double> rb = average_ranks(b);
    const double mean = 0.5 * static_cast<double>(a.size() + 1);
    double num = 0.0;
    double da = 0.0;
    double db = 0.0;
    for (std::size_t i = 0; i < ra.size(); ++i) {
        num += (ra[i] - mean) * (rb[i] - mean);
        da += (ra[i] - mean) * (ra[i] - mean);
        db += (rb[i] - mean) * (rb[i] - mean);
    }
    if (da == 0.0 || db == 0.0) return 0.0;  // a constant series carries no ranking
    return num / std::sqrt(da * db);
}

ComparisonReport compare(const Scenario& s) {
    const BuildResult built = build(s);

    ComparisonReport report;
    report.scenario_name = s.name;
    report.kind = s.kind;
    report.config_hash = s.config_hash;
    report.seed = s.seed;
    report.labels = built.set.labels;
    report.dead_branch_present = built.dead_branch_present;
    report.measures = measures::all_measures(built.set);

    for (std::size_t i = 0; i < report.measures.size(); ++i) {
        for (std::size_t j = i + 1; j < report.measures.size(); ++j) {
            report.total_variation.push_back(
                {report.measures[i].measure_name, report.measures[j].measure_name,
                 measures::total_variation(report.measures[i], report.measures[j])});
        }
    }

    if (s.kind == Scenario::Kind::Codec) {
        report.entropy_bits = built.entropy_bits;
        report.delta_h_bits = built.delta_h_bits;
        report.amplitude_abs = built.amplitude_abs;
        report.base_entropy_bits = built.base_entropy_bits;

        std::vector<double> neg_dh(built.delta_h_bits.size());
        std::transform(built.delta_h_bits.begin(), built.delta_h_bits.end(), neg_dh.begin(),
                       [](double d) { return -d; });
        if (neg_dh.size() >= 2) {
            report.spearman_amp_vs_neg_delta_h =
                spearman_rank_correlation(built.amplitude_abs, neg_dh);
        }

        // Quantitative comparison of the two weightings: normalized |a|^2
        // against the algorithmic probabilities.
        double total = 0.0;
        for (double a : built.amplitude_abs) total += a * a;
        if (total > 0.0) {
            report.born_from_amplitudes.resize(built.amplitude_abs.size());
            for (std::size_t i = 0; i < built.amplitude_abs.size(); ++i) {
                report.born_from_amplitudes[i] = built.amplitude_abs[i] *
                                                 built.amplitude_abs[i] / total;
            }
            const auto algo = std::find_if(
                report.measures.begin(), report.measures.end(),
                [](const measures::MeasureResult& m) { return m.measure_name == "algorithmic"; });
            if (algo != report.measures.end()) {
                double gap = 0.0;
                for (std::size_t i = 0; i < report.born_from_amplitudes.size(); ++i) {
                    gap = std::max(gap, std::abs(report.born_from_amplitudes[i] -
                                                 algo->probabilities[i]));
                }
                report.max_gap_born_vs_algorithmic = gap;
            }
        }
    }

    if (s.trials > 0) {
        const char* primary = s.kind == Scenario::Kind::Replicator  ? "copy_count"
                              : s.kind == Scenario::Kind::Quantum   ? "born"
                                                                    : "algorithmic";
        const auto it = std::find_if(
            report.measures.begin(), report.measures.end(),
            [&](const measures::MeasureResult& m) { return m.measure_name == primary; });
        if (it != report.measures.end()) {
            MonteCarloBlock mc;
            mc.measure_name = it->measure_name;
            mc.trials = s.trials;
            mc.seed = s.seed;
            mc.counts = monte_carlo_counts(*it, s.trials, s.seed);
            mc.frequencies.resize(mc.counts.size());
            for (std::size_t i = 0; i < mc.counts.size(); ++i) {
                mc.frequencies[i] =
                    static_cast<double>(mc.counts[i]) / static_cast<double>(s.trials);
            }
            report.monte_carlo = std::move(mc);
        }
    }
    return report;
}

Scenario scenario_from_json(const nlohmann::json& j) {
    Scenario s;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "replicator") {
        s.kind = Scenario::Kind::Replicator;
    } else if (kind == "quantum") {
        s.kind = Scenario::Kind::Quantum;
    } else if (kind == "codec") {
        s.kind = Scenario::Kind::Codec;
    } else {
        throw std::invalid_argument("unknown scenario kind: " + kind);
    }
    s.name = j.value("name", std::string{"unnamed"});
    s.seed = j.value("seed", std::uint64_t{0});
    s.trials = j.value("trials", std::uint64_t{0});

    switch (s.kind) {
        case Scenario::Kind::Replicator:
            for (const nlohmann::json& room : j.at("rooms")) {
                s.rooms.push_back(Room{room.at("label").get<std::string>(),
                                       room.value("count", std::uint64_t{1})});
            }
            break;
        case Scenario::Kind::Quantum:
            if (j.contains("psi")) {
                std::vector<Complex> amps;
                for (const nlohmann::json& a : j.at("psi")) amps.push_back(parse_complex(a));
                s.psi = StateVector(std::move(amps));
                for (const nlohmann::json& c : j.at("continuers")) {
                    std::vector<Complex> state;
                    for (const nlohmann::json& a : c.at("state")) {
                        state.push_back(parse_complex(a));
                    }
                    s.continuer_states.push_back(StateVector(std::move(state)));
                    if (c.contains("label")) {
                        s.continuer_labels.push_back(c.at("label").get<std::string>());
                    }
                }
                if (!s.continuer_labels.empty() &&
                    s.continuer_labels.size() != s.continuer_states.size()) {
                    throw std::invalid_argument("label every continuer or none");
                }
            } else {
                for (const nlohmann::json& o : j.at("outcomes")) {
                    Outcome outcome;
                    outcome.label = o.at("label").get<std::string>();
                    if (o.contains("paths")) {
                        for (const nlohmann::json& p : o.at("paths")) {
                            outcome.paths.push_back(parse_complex(p));
                        }
                    } else {
                        outcome.paths.push_back(parse_complex(o.at("amplitude")));
                    }
                    s.outcomes.push_back(std::move(outcome));
                }
            }
            break;
        case Scenario::Kind::Codec: {
            const nlohmann::json& sig = j.at("signal");
            s.base_signal.dimension = sig.at("dimension").get<std::size_t>();
            for (const nlohmann::json& c : sig.value("components", nlohmann::json::array())) {
                s.base_signal.components.push_back(FrequencyComponent{
                    c.at("k").get<std::size_t>(), parse_complex(c.at("amplitude"))});
            }
            s.epsilon = j.value("epsilon", codec::kDefaultDistortionBudget);
            for (const nlohmann::json& p : j.at("perturbations")) {
                Perturbation pert;
                pert.label = p.at("label").get<std::string>();
                for (const nlohmann::json& c :
                     p.value("add_components", nlohmann::json::array())) {
                    pert.add_components.push_back(FrequencyComponent{
                        c.at("k").get<std::size_t>(), parse_complex(c.at("amplitude"))});
                }
                if (p.contains("noise_seed")) {
                    pert.noise_seed = p.at("noise_seed").get<std::uint64_t>();
                    pert.noise_scale = p.value("noise_scale", 1.0);
                }
                s.perturbations.push_back(std::move(pert));
            }
            break;
        }
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open scenario config: " + path.string());
    std::stringstream buffer;
    buffer << file.rdbuf();
    const std::string text = buffer.str();

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("config " + path.string() + ": " + e.what());
    }
    Scenario s = scenario_from_json(j);
    s.config_hash = fnv1a_hex(std::span<const char>(text.data(), text.size()));
    return s;
}

nlohmann::json report_to_json(const ComparisonReport& report,
                              std::optional<std::string> timestamp) {
    nlohmann::json j;
    j["scenario"] = report.scenario_name;
    j["kind"] = kind_name(report.kind);
    j["labels"] = report.labels;

    nlohmann::json provenance;
    provenance["config_hash"] = report.config_hash;
    provenance["seed"] = report.seed;
    provenance["library_version"] = kVersion;
    provenance["rng"] = "mt19937_64/cdf-inversion";
    if (timestamp) provenance["timestamp"] = *timestamp;
    j["provenance"] = provenance;

    nlohmann::json measures_json;
    for (const measures::MeasureResult& m : report.measures) {
        nlohmann::json entry;
        entry["probabilities"] = doubles_to_json(m.probabilities);
        entry["log_weights"] = doubles_to_json(m.log_weights);
        measures_json[m.measure_name] = entry;
    }
    j["measures"] = measures_json;

    nlohmann::json tv = nlohmann::json::array();
    for (const TotalVariationEntry& entry : report.total_variation) {
        tv.push_back({{"a", entry.measure_a}, {"b", entry.measure_b},
                      {"distance", entry.distance}});
    }
    j["total_variation"] = tv;
    if (report.dead_branch_present) j["dead_branch"] = true;

    if (report.kind == Scenario::Kind::Codec) {
        nlohmann::json codec_json;
        codec_json["base_entropy_bits"] = report.base_entropy_bits;
        codec_json["entropy_bits"] = doubles_to_json(report.entropy_bits);
        codec_json["delta_h_bits"] = doubles_to_json(report.delta_h_bits);
        codec_json["amplitude_abs"] = doubles_to_json(report.amplitude_abs);
        if (report.spearman_amp_vs_neg_delta_h) {
            codec_json["spearman_amp_vs_neg_delta_h"] = *report.spearman_amp_vs_neg_delta_h;
        }
        if (!report.born_from_amplitudes.empty()) {
            codec_json["born_from_amplitudes"] = doubles_to_json(report.born_from_amplitudes);
        }
        if (report.max_gap_born_vs_algorithmic) {
            codec_json["max_gap_born_vs_algorithmic"] = *report.max_gap_born_vs_algorithmic;
        }
        j["codec"] = codec_json;
    }

    if (report.monte_carlo) {
        nlohmann::json mc;
        mc["measure"] = report.monte_carlo->measure_name;
        mc["trials"] = report.monte_carlo->trials;
        mc["seed"] = report.monte_carlo->seed;
        mc["counts"] = report.monte_carlo->counts;
        mc["frequencies"] = doubles_to_json(report.monte_carlo->frequencies);
        j["monte_carlo"] = mc;
    }
    return j;
}

}  // namespace blc::scenario
