#include "tabcomp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <set>
#include <thread>

#include "json.hpp"

#include "tabcomp/error.hpp"

namespace tabcomp {

namespace {

// Stream 0 draws the stored sequence; sweep point p samples from stream p + 1.
constexpr std::uint64_t stored_stream = 0;

// Enumerate-and-shuffle below this many total functions, rejection above it.
constexpr std::uint64_t shuffle_limit = 1u << 16;

Natural total_function_count(const TableShape& shape) {
    return boost::multiprecision::pow(Natural(shape.m()), shape.n());
}

FunctionIndex total_function_from_rank(const TableShape& shape, std::uint64_t rank) {
    std::vector<Digit> digits(shape.n());
    for (std::size_t i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<Digit>(rank % shape.m()) + 1;
        rank /= shape.m();
    }
    return FunctionIndex(shape, std::move(digits));
}

FunctionIndex random_total_function(const TableShape& shape, Random& random) {
    std::vector<Digit> digits(shape.n());
    for (auto& d : digits)
        d = static_cast<Digit>(random.uniform_below(shape.m())) + 1;
    return FunctionIndex(shape, std::move(digits));
}

SweepPoint run_point(const ExperimentConfig& config, std::span<const FunctionIndex> stored,
                     std::uint64_t point) {
    RelationTable relation(config.shape);
    for (const auto& f : stored)
        relation = superpose(relation, RelationTable(f));

    std::set<FunctionIndex> members(stored.begin(), stored.end());
    Random random = Random::derive(config.seed, point + 1);
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        if (members.contains(encode(sample_function(relation, random))))
            ++hits;
    }

    SweepPoint result;
    result.stored = stored.size();
    result.entropy = entropy(relation);
    result.contained_total = count_contained(relation, CountMode::total_on_support);
    result.precision_expected = expected_precision(relation, stored);
    result.precision_observed = static_cast<double>(hits) / static_cast<double>(config.trials);
    return result;
}

} // namespace

void validate(const ExperimentConfig& config) {
    if (config.trials == 0)
        throw ConfigError("trials must be >= 1");
    const Natural total = total_function_count(config.shape);
    for (std::uint64_t s : config.stored_counts) {
        if (s == 0)
            throw ConfigError("stored counts must be >= 1");
        if (config.distinct && Natural(s) > total)
            throw ConfigError("cannot store " + std::to_string(s) + " distinct functions; shape " +
                              config.shape.to_string() + " has only " + total.str() +
                              " total functions");
    }
}

std::vector<FunctionIndex> draw_stored_functions(const TableShape& shape, std::uint64_t count,
                                                 std::uint64_t seed, bool distinct) {
    const Natural total = total_function_count(shape);
    if (distinct && Natural(count) > total)
        throw ConfigError("cannot draw " + std::to_string(count) + " distinct functions from " +
                          total.str());
    Random random = Random::derive(seed, stored_stream);
    std::vector<FunctionIndex> stored;
    stored.reserve(count);

    if (distinct && total <= shuffle_limit) {
        // Partial Fisher-Yates over all ranks.
        auto ranks_total = total.convert_to<std::uint64_t>();
        std::vector<std::uint64_t> ranks(ranks_total);
        for (std::uint64_t r = 0; r < ranks_total; ++r)
            ranks[r] = r;
        for (std::uint64_t i = 0; i < count; ++i) {
            std::swap(ranks[i], ranks[i + random.uniform_below(ranks_total - i)]);
            stored.push_back(total_function_from_rank(shape, ranks[i]));
        }
        return stored;
    }

    std::set<FunctionIndex> seen;
    while (stored.size() < count) {
        FunctionIndex f = random_total_function(shape, random);
        if (distinct && !seen.insert(f).second)
            continue;
        stored.push_back(std::move(f));
    }
    return stored;
}

double expected_precision(const RelationTable& relation, std::span<const FunctionIndex> stored) {
    const std::set<FunctionIndex> unique(stored.begin(), stored.end());
    double sum = 0.0;
    for (const auto& f : unique)
        sum += sample_probability(relation, f);
    return std::min(sum, 1.0);
}

ExperimentReport run_sweep(const ExperimentConfig& config, unsigned threads) {
    validate(config);
    ExperimentReport report;
    report.shape = config.shape;
    report.trials = config.trials;
    report.seed = config.seed;
    if (config.stored_counts.empty())
        return report;

    const std::uint64_t largest =
        *std::max_element(config.stored_counts.begin(), config.stored_counts.end());
    const auto stored = draw_stored_functions(config.shape, largest, config.seed, config.distinct);

    const std::size_t points = config.stored_counts.size();
    report.points.resize(points);
    auto work = [&](std::size_t p) {
        std::span<const FunctionIndex> prefix(stored.data(), config.stored_counts[p]);
        report.points[p] = run_point(config, prefix, p);
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, points));
    if (threads <= 1) {
        for (std::size_t p = 0; p < points; ++p)
            work(p);
        return report;
    }

    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t p = next++; p < points; p = next++)
                work(p);
        });
    }
    pool.clear();
    return report;
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

std::string emit_csv(const ExperimentReport& report) {
    std::string out = "S,entropy,contained_total,precision_expected,precision_observed\n";
    for (const auto& p : report.points) {
        out += std::to_string(p.stored) + ',' + format_double(p.entropy) + ',' +
               p.contained_total.str() + ',' + format_double(p.precision_expected) + ',' +
               format_double(p.precision_observed) + '\n';
    }
    return out;
}

std::string emit_json(const ExperimentReport& report) {
    nlohmann::ordered_json doc;
    doc["shape"] = report.shape.to_string();
    doc["trials"] = report.trials;
    doc["seed"] = report.seed;
    doc["points"] = nlohmann::ordered_json::array();
    for (const auto& p : report.points) {
        nlohmann::ordered_json point;
        point["S"] = p.stored;
        point["entropy"] = p.entropy;
        // Decimal string: counts outgrow 64 bits.
        point["contained_total"] = p.contained_total.str();
        point["precision_expected"] = p.precision_expected;
        point["precision_observed"] = p.precision_observed;
        doc["points"].push_back(std::move(point));
    }
    return doc.dump(2) + '\n';
}

ExperimentReport parse_report_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
        ExperimentReport report;
        report.shape = TableShape::parse(doc.at("shape").get<std::string>());
        report.trials = doc.at("trials").get<std::uint64_t>();
        report.seed = doc.at("seed").get<std::uint64_t>();
        for (const auto& p : doc.at("points")) {
            SweepPoint point;
            point.stored = p.at("S").get<std::uint64_t>();
            point.entropy = p.at("entropy").get<double>();
            point.contained_total = Natural(p.at("contained_total").get<std::string>());
            point.precision_expected = p.at("precision_expected").get<double>();
            point.precision_observed = p.at("precision_observed").get<double>();
            report.points.push_back(std::move(point));
        }
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(1, 1, std::string("malformed report: ") + e.what());
    }
}

} // namespace tabcomp
