#include "rankatlas/atlas.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "rankatlas/errors.hpp"
#include "rankatlas/format.hpp"
#include "rankatlas/hypercube.hpp"

namespace rankatlas {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kFormatTag = "rank-atlas/1";

ordered_json rational_json(const Rational& value) {
    ordered_json obj;
    obj["exact"] = rational_to_string(value);
    obj["value"] = std::stod(decimal_string(value, 6));
    return obj;
}

Rational rational_from_json(const ordered_json& obj) {
    return rational_from_string(obj.at("exact").get<std::string>());
}

ordered_json climber_json(const ClimbReport& report) {
    ordered_json obj;
    obj["success"] = rational_json(report.success_rate);
    obj["steps_success"] = rational_json(report.exp_steps_success);
    obj["evals_success"] = rational_json(report.exp_evals_success);
    if (report.has_fail) {
        obj["steps_fail"] = rational_json(report.exp_steps_fail);
        obj["evals_fail"] = rational_json(report.exp_evals_fail);
    } else {
        obj["steps_fail"] = nullptr;
        obj["evals_fail"] = nullptr;
    }
    obj["ert"] = rational_json(report.multistart_ert);
    return obj;
}

ClimbReport climber_from_json(const ordered_json& obj) {
    ClimbReport report;
    report.success_rate = rational_from_json(obj.at("success"));
    report.exp_steps_success = rational_from_json(obj.at("steps_success"));
    report.exp_evals_success = rational_from_json(obj.at("evals_success"));
    report.has_fail = !obj.at("steps_fail").is_null();
    if (report.has_fail) {
        report.exp_steps_fail = rational_from_json(obj.at("steps_fail"));
        report.exp_evals_fail = rational_from_json(obj.at("evals_fail"));
    }
    report.multistart_ert = rational_from_json(obj.at("ert"));
    return report;
}

ordered_json props_json(const PropertyReport& props) {
    ordered_json obj;
    obj["k"] = props.k_ranks;
    obj["global_optima"] = props.global_optima;
    obj["strict_suboptima"] = props.strict_suboptima;
    obj["weak_suboptima"] = props.weak_suboptima;
    obj["neutral_edges"] = props.neutral_edges;
    obj["neutral_nodes"] = props.neutral_node_count;
    obj["neutral_networks"] = props.neutral_networks;
    obj["optimal_plateaus"] = props.optimal_plateaus;
    obj["suboptimal_plateaus"] = props.suboptimal_plateaus;
    obj["deceptive"] = to_string(props.deceptive_flag);
    obj["neutral"] = props.neutral_flag;
    obj["plateau"] = props.plateau_flag;
    return obj;
}

PropertyReport props_from_json(const ordered_json& obj, int n) {
    PropertyReport props;
    props.n = n;
    props.k_ranks = obj.at("k").get<int>();
    props.global_optima = obj.at("global_optima").get<std::uint32_t>();
    props.strict_suboptima = obj.at("strict_suboptima").get<std::uint32_t>();
    props.weak_suboptima = obj.at("weak_suboptima").get<std::uint32_t>();
    props.neutral_edges = obj.at("neutral_edges").get<std::uint32_t>();
    props.neutral_node_count = obj.at("neutral_nodes").get<std::uint32_t>();
    props.neutral_networks = obj.at("neutral_networks").get<std::uint32_t>();
    props.optimal_plateaus = obj.at("optimal_plateaus").get<std::uint32_t>();
    props.suboptimal_plateaus = obj.at("suboptimal_plateaus").get<std::uint32_t>();
    props.deceptive_flag = deceptive_kind_from_string(obj.at("deceptive").get<std::string>());
    props.neutral_flag = obj.at("neutral").get<bool>();
    props.plateau_flag = obj.at("plateau").get<bool>();
    return props;
}

std::string record_line(const ClassRecord& record) {
    ordered_json obj;
    obj["id"] = record.class_id;
    obj["ranks"] = record.canonical.ranks;
    obj["letters"] = rank_letters(record.canonical);
    obj["partition"] = record.partition.parts;
    obj["orbit"] = record.orbit_size;
    obj["stabilizer"] = record.stabilizer_order;
    obj["props"] = props_json(record.props);
    obj["best"] = climber_json(record.best);
    obj["first"] = climber_json(record.first);
    return obj.dump();
}

ClassRecord record_from_line(const std::string& line, int n) {
    ordered_json obj;
    try {
        obj = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
        throw io_error(std::string("malformed atlas record: ") + e.what());
    }
    ClassRecord record;
    record.n = n;
    record.class_id = obj.at("id").get<std::uint32_t>();
    record.canonical.n = n;
    record.canonical.ranks = obj.at("ranks").get<std::vector<Rank>>();
    record.partition.parts = obj.at("partition").get<std::vector<std::uint32_t>>();
    record.orbit_size = obj.at("orbit").get<std::uint32_t>();
    record.stabilizer_order = obj.at("stabilizer").get<std::uint32_t>();
    record.props = props_from_json(obj.at("props"), n);
    record.best = climber_from_json(obj.at("best"));
    record.first = climber_from_json(obj.at("first"));
    return record;
}

// crosstab cell of a report; plateau implies neutral, so 6 cells cover all
std::size_t crosstab_index(const PropertyReport& props) {
    const bool deceptive = props.deceptive_flag != DeceptiveKind::none;
    if (props.plateau_flag && !props.neutral_flag) {
        throw std::logic_error("plateau without neutrality");
    }
    if (props.plateau_flag) return deceptive ? 5 : 4;
    if (props.neutral_flag) return deceptive ? 3 : 2;
    return deceptive ? 1 : 0;
}

Cdf make_cdf(std::vector<Rational> values) {
    std::sort(values.begin(), values.end(),
              [](const Rational& a, const Rational& b) { return cmp(a, b) < 0; });
    Cdf cdf;
    for (std::uint32_t i = 0; i < values.size(); ++i) {
        if (!cdf.empty() && cmp(cdf.back().first, values[i]) == 0) {
            cdf.back().second = i + 1;
        } else {
            cdf.emplace_back(values[i], i + 1);
        }
    }
    return cdf;
}

}  // namespace

const std::array<const char*, 6> kCrosstabLabels = {"FFF", "TFF", "FTF",
                                                    "TTF", "FTT", "TTT"};

std::string fnv1a64_digest(const std::string& bytes) {
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buffer;
}

Atlas build_atlas(int n, int cap) {
    Atlas atlas;
    atlas.n = n;
    const std::vector<ClassEntry> classes = classify_all(n, cap);
    atlas.records.reserve(classes.size());
    for (std::uint32_t id = 0; id < classes.size(); ++id) {
        const ClassEntry& entry = classes[id];
        ClassRecord record;
        record.n = n;
        record.class_id = id;
        record.canonical = entry.canonical;
        record.partition = partition_of(entry.canonical);
        record.orbit_size = entry.orbit.orbit_size;
        record.stabilizer_order = entry.orbit.stabilizer_order;
        record.props = analyze(entry.canonical);
        record.best = analyze_best(entry.canonical);
        record.first = analyze_first(entry.canonical);
        atlas.total_rankings += record.orbit_size;
        atlas.records.push_back(std::move(record));
    }
    std::string body;
    for (const ClassRecord& record : atlas.records) {
        body += record_line(record);
        body += '\n';
    }
    atlas.digest = fnv1a64_digest(body);
    return atlas;
}

std::string atlas_to_jsonl(const Atlas& atlas) {
    std::string body;
    for (const ClassRecord& record : atlas.records) {
        body += record_line(record);
        body += '\n';
    }
    ordered_json header;
    header["format"] = kFormatTag;
    header["n"] = atlas.n;
    header["classes"] = atlas.records.size();
    header["total_rankings"] = atlas.total_rankings.get_str();
    header["digest"] = fnv1a64_digest(body);
    return header.dump() + "\n" + body;
}

Atlas atlas_from_jsonl(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw io_error("empty atlas file");

    ordered_json header;
    try {
        header = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
        throw io_error(std::string("malformed atlas header: ") + e.what());
    }
    if (header.value("format", "") != kFormatTag) {
        throw io_error("unrecognized atlas format tag");
    }

    Atlas atlas;
    atlas.n = header.at("n").get<int>();
    check_dimension(atlas.n);
    atlas.total_rankings = BigCount(header.at("total_rankings").get<std::string>());
    const auto expected_classes = header.at("classes").get<std::uint64_t>();
    atlas.digest = header.at("digest").get<std::string>();

    std::string body;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        body += line;
        body += '\n';
        atlas.records.push_back(record_from_line(line, atlas.n));
    }
    if (fnv1a64_digest(body) != atlas.digest) {
        throw io_error("atlas digest mismatch: file corrupt or truncated");
    }
    if (atlas.records.size() != expected_classes) {
        throw io_error("atlas class count mismatch");
    }

    BigCount orbit_sum;
    for (std::uint32_t id = 0; id < atlas.records.size(); ++id) {
        const ClassRecord& record = atlas.records[id];
        if (record.class_id != id) throw io_error("atlas records out of order");
        check_rank_vector(record.canonical);
        orbit_sum += record.orbit_size;
    }
    if (cmp(orbit_sum, atlas.total_rankings) != 0) {
        throw io_error("atlas orbit sizes inconsistent with total rankings");
    }
    return atlas;
}

void save_atlas(const Atlas& atlas, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << atlas_to_jsonl(atlas);
    if (!out.flush()) throw io_error("write failed: " + path);
}

Atlas load_atlas(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return atlas_from_jsonl(buffer.str());
}

namespace {

void append_climber_csv(std::string& out, const ClimbReport& report) {
    out += decimal_string(report.success_rate, 6);
    out += ',';
    out += decimal_string(report.exp_steps_success, 6);
    out += ',';
    out += decimal_string(report.exp_evals_success, 6);
    out += ',';
    if (report.has_fail) out += decimal_string(report.exp_steps_fail, 6);
    out += ',';
    if (report.has_fail) out += decimal_string(report.exp_evals_fail, 6);
    out += ',';
    out += decimal_string(report.multistart_ert, 6);
}

}  // namespace

std::string atlas_to_csv(const Atlas& atlas) {
    std::string out =
        "id,n,k,letters,partition,orbit,stabilizer,"
        "global_optima,strict_suboptima,weak_suboptima,neutral_edges,"
        "neutral_nodes,neutral_networks,optimal_plateaus,suboptimal_plateaus,"
        "deceptive,neutral,plateau,"
        "best_success,best_steps_success,best_evals_success,"
        "best_steps_fail,best_evals_fail,best_ert,"
        "first_success,first_steps_success,first_evals_success,"
        "first_steps_fail,first_evals_fail,first_ert\n";
    for (const ClassRecord& record : atlas.records) {
        out += std::to_string(record.class_id);
        out += ',';
        out += std::to_string(record.n);
        out += ',';
        out += std::to_string(record.props.k_ranks);
        out += ',';
        out += rank_letters(record.canonical);
        out += ',';
        for (std::size_t i = 0; i < record.partition.parts.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(record.partition.parts[i]);
        }
        out += ',';
        out += std::to_string(record.orbit_size);
        out += ',';
        out += std::to_string(record.stabilizer_order);
        out += ',';
        out += std::to_string(record.props.global_optima);
        out += ',';
        out += std::to_string(record.props.strict_suboptima);
        out += ',';
        out += std::to_string(record.props.weak_suboptima);
        out += ',';
        out += std::to_string(record.props.neutral_edges);
        out += ',';
        out += std::to_string(record.props.neutral_node_count);
        out += ',';
        out += std::to_string(record.props.neutral_networks);
        out += ',';
        out += std::to_string(record.props.optimal_plateaus);
        out += ',';
        out += std::to_string(record.props.suboptimal_plateaus);
        out += ',';
        out += to_string(record.props.deceptive_flag);
        out += ',';
        out += record.props.neutral_flag ? "true" : "false";
        out += ',';
        out += record.props.plateau_flag ? "true" : "false";
        out += ',';
        append_climber_csv(out, record.best);
        out += ',';
        append_climber_csv(out, record.first);
        out += '\n';
    }
    return out;
}

void export_csv(const Atlas& atlas, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path);
    out << atlas_to_csv(atlas);
    if (!out.flush()) throw io_error("write failed: " + path);
}

const ClassRecord& lookup_ranks(const Atlas& atlas, const RankVector& rv) {
    if (rv.n != atlas.n) {
        throw not_found_error("atlas holds dimension n=" + std::to_string(atlas.n) +
                              ", queried with n=" + std::to_string(rv.n));
    }
    const auto [canon, info] = canonicalize(rv);
    (void)info;
    const auto it = std::lower_bound(
        atlas.records.begin(), atlas.records.end(), canon.rv.ranks,
        [](const ClassRecord& record, const std::vector<Rank>& key) {
            return record.canonical.ranks < key;
        });
    if (it == atlas.records.end() || it->canonical.ranks != canon.rv.ranks) {
        throw not_found_error("canonical form missing from atlas (incomplete file?)");
    }
    return *it;
}

const ClassRecord& lookup(const Atlas& atlas, const std::vector<double>& fitness) {
    const std::uint32_t size = num_nodes(atlas.n);
    if (fitness.size() != size) {
        throw not_found_error("atlas holds dimension n=" + std::to_string(atlas.n) +
                              " (" + std::to_string(size) + " values), fitness table has " +
                              std::to_string(fitness.size()));
    }
    return lookup_ranks(atlas, rank_of(fitness, atlas.n));
}

void audit_atlas(const Atlas& atlas) {
    for (const ClassRecord& record : atlas.records) {
        const auto [canon, info] = canonicalize(record.canonical);
        if (canon.rv != record.canonical) throw std::logic_error("record not canonical");
        if (info.orbit_size != record.orbit_size ||
            info.stabilizer_order != record.stabilizer_order) {
            throw std::logic_error("orbit data mismatch");
        }
        if (partition_of(record.canonical) != record.partition) {
            throw std::logic_error("partition mismatch");
        }
        if (analyze(record.canonical) != record.props) {
            throw std::logic_error("property report mismatch");
        }
        if (analyze_best(record.canonical) != record.best ||
            analyze_first(record.canonical) != record.first) {
            throw std::logic_error("performance report mismatch");
        }
    }
}

StatsSummary summarize(const Atlas& atlas) {
    if (atlas.records.empty()) throw domain_error("stats of an empty atlas");
    StatsSummary stats;
    stats.classes = static_cast<std::uint32_t>(atlas.records.size());
    stats.total_landscapes = atlas.total_rankings;

    std::vector<Rational> success_best, success_first, ert_best, ert_first;
    for (const ClassRecord& record : atlas.records) {
        const PropertyReport& props = record.props;
        ++stats.crosstab[crosstab_index(props)];
        ++stats.by_k_ranks[props.k_ranks];
        ++stats.by_orbit_size[record.orbit_size];
        ++stats.by_global_optima[props.global_optima];
        ++stats.by_suboptima[props.suboptima()];
        ++stats.by_neutral_edges[props.neutral_edges];
        ++stats.by_plateaus[props.plateaus()];
        ++stats.by_suboptimal_plateaus[props.suboptimal_plateaus];

        const ClimbComparison comparison = compare(record.best, record.first);
        auto bump = [](Tally& tally, Advantage who) {
            if (who == Advantage::best) ++tally.best;
            else if (who == Advantage::first) ++tally.first;
            else ++tally.tie;
        };
        bump(stats.success_tally, comparison.success);
        bump(stats.ert_tally, comparison.ert);

        if (props.k_ranks == static_cast<int>(num_nodes(record.n))) ++stats.injective_classes;
        if (props.global_optima >= 2) {
            ++stats.multi_global_classes;
            stats.multi_global_landscapes += record.orbit_size;
        }
        if (props.deceptive_flag != DeceptiveKind::none) ++stats.deceptive_classes;
        if (props.deceptive_flag == DeceptiveKind::strict) ++stats.strictly_deceptive_classes;
        if (props.deceptive_flag == DeceptiveKind::weak) ++stats.weakly_deceptive_classes;
        if (props.neutral_flag) ++stats.neutral_classes;
        if (props.plateau_flag) ++stats.plateau_classes;

        success_best.push_back(record.best.success_rate);
        success_first.push_back(record.first.success_rate);
        ert_best.push_back(record.best.multistart_ert);
        ert_first.push_back(record.first.multistart_ert);
    }
    stats.success_cdf_best = make_cdf(std::move(success_best));
    stats.success_cdf_first = make_cdf(std::move(success_first));
    stats.ert_cdf_best = make_cdf(std::move(ert_best));
    stats.ert_cdf_first = make_cdf(std::move(ert_first));
    return stats;
}

}  // namespace rankatlas
