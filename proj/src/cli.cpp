#include "tabcomp/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "tabcomp/document.hpp"
#include "tabcomp/enumeration.hpp"
#include "tabcomp/error.hpp"
#include "tabcomp/experiment.hpp"
#include "tabcomp/relation.hpp"
#include "tabcomp/table.hpp"

namespace tabcomp {

namespace {

// Thrown for unreadable files and bad flag values; maps to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

struct Io {
    std::istream& in;
    std::ostream& out;
};

std::string read_source(const std::string& path, Io& io) {
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(io.in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

TableDocument load_document(const std::string& path, Io& io) {
    return parse_table_document(read_source(path, io));
}

FunctionTable require_function(const TableDocument& doc) {
    if (const auto* f = std::get_if<FunctionIndex>(&doc.payload))
        return decode(*f);
    return std::get<RelationTable>(doc.payload).to_function();
}

std::vector<Digit> parse_digits(const std::string& text) {
    std::istringstream stream(text);
    std::vector<Digit> digits;
    std::string token;
    while (stream >> token) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.front() == '-' || value > 0xffffffffUL)
            throw InputError("--k digits must be space-separated naturals, got '" + token + "'");
        digits.push_back(static_cast<Digit>(value));
    }
    return digits;
}

FunctionIndex make_index(const std::string& shape, const std::string& k) {
    return FunctionIndex(TableShape::parse(shape), parse_digits(k));
}

std::string join(const std::vector<Column>& columns) {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ' ';
        out += std::to_string(columns[i]);
    }
    return out;
}

std::string render_grid(const FunctionTable& table) {
    const TableShape& shape = table.shape();
    const std::size_t width = std::to_string(shape.m()).size();
    std::string out;
    for (Row r = shape.m(); r >= 1; --r) {
        std::string label = std::to_string(r);
        out += std::string(width - label.size(), ' ') + label + " |";
        for (Column c = 1; c <= shape.n(); ++c)
            out += table.marked_row(c) == r ? " x" : " .";
        out += '\n';
    }
    return out;
}

std::string value_text(Row row, const TableDocument& doc, bool labels) {
    if (labels) {
        if (auto it = doc.value_labels.find(row); it != doc.value_labels.end())
            return it->second;
    }
    return std::to_string(row);
}

std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(text, &used, 0);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || text.front() == '-')
        throw InputError("--seed must be an unsigned 64-bit integer, got '" + text + "'");
    return value;
}

std::vector<std::uint64_t> parse_counts(const std::string& text) {
    std::vector<std::uint64_t> counts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (item.empty() || used != item.size() || item.front() == '-')
            throw InputError("--stored takes comma-separated counts, got '" + text + "'");
        counts.push_back(value);
    }
    return counts;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Io io{in, out};
    CLI::App app{"Table Computing and Relational-Indeterminate Computing toolkit", "tabcomp"};
    app.require_subcommand(1);
    app.fallthrough(false);

    std::string shape_text, k_text, file, second_file, format, mode = "total", seed_text,
                                                                 table_text, number_text;
    std::vector<std::string> files, k_list;
    std::uint32_t argument = 0, value = 0;
    std::uint64_t trials = 1, count = 1;
    unsigned threads = 1;
    bool labels = false, with_replacement = false;
    std::string stored_text;

    auto* encode_cmd = app.add_subcommand("encode", "Print the index k of a function table");
    encode_cmd->add_option("file", file, "Table document (default: stdin)");

    auto* decode_cmd = app.add_subcommand("decode", "Print the table of an index");
    decode_cmd->add_option("--shape", shape_text, "NxM")->required();
    decode_cmd->add_option("--k", k_text, "Space-separated digits")->required();
    decode_cmd->add_option("--format", format, "grid | document")
        ->check(CLI::IsMember({"grid", "document"}));

    auto* number_cmd = app.add_subcommand("number", "Global number of a function");
    number_cmd->add_option("--shape", shape_text, "NxM")->required();
    number_cmd->add_option("--k", k_text, "Space-separated digits")->required();

    auto* unnumber_cmd = app.add_subcommand("unnumber", "Function with a given global number");
    unnumber_cmd->add_option("number", number_text, "Global number, >= 1")->required();

    auto* shape_cmd = app.add_subcommand("shape", "Convert between table numbers and shapes");
    auto* shape_table_opt = shape_cmd->add_option("--table", table_text, "Table number, >= 1");
    auto* shape_shape_opt = shape_cmd->add_option("--shape", shape_text, "NxM");
    shape_table_opt->excludes(shape_shape_opt);
    shape_cmd->require_option(1);

    auto* count_cmd = app.add_subcommand("count", "Number of functions of a shape, (m+1)^n");
    count_cmd->add_option("--shape", shape_text, "NxM")->required();

    auto* eval_cmd = app.add_subcommand("eval", "Value at an argument (random for relations)");
    eval_cmd->add_option("file", file, "Table document (default: stdin)");
    eval_cmd->add_option("--arg", argument, "Argument position")->required();
    eval_cmd->add_option("--seed", seed_text, "Seed; required for relations");
    eval_cmd->add_flag("--labels", labels, "Print value labels when present");

    auto* inverse_cmd = app.add_subcommand("inverse", "Arguments holding a value");
    inverse_cmd->add_option("file", file, "Table document (default: stdin)");
    inverse_cmd->add_option("--value", value, "Value position")->required();

    auto* entropy_cmd = app.add_subcommand("entropy", "Computational entropy in bits per argument");
    entropy_cmd->add_option("file", file, "Table document (default: stdin)");

    auto* superpose_cmd = app.add_subcommand("superpose", "Cell-wise union of tables");
    superpose_cmd->add_option("files", files, "Two or more table documents")->required();

    auto* contains_cmd = app.add_subcommand("contains", "Whether a relation contains a function");
    contains_cmd->add_option("relation", file, "Relation document")->required();
    contains_cmd->add_option("function", second_file, "Function document")->required();

    auto* contained_cmd = app.add_subcommand("contained-count", "Count functions contained in a relation");
    contained_cmd->add_option("file", file, "Table document (default: stdin)");
    contained_cmd->add_option("--mode", mode, "total | partial")
        ->check(CLI::IsMember({"total", "partial"}));

    auto* sample_cmd = app.add_subcommand("sample", "Draw functions from a relation");
    sample_cmd->add_option("file", file, "Table document (default: stdin)");
    sample_cmd->add_option("--seed", seed_text, "Seed")->required();
    sample_cmd->add_option("--count", count, "Number of draws")->check(CLI::PositiveNumber);

    auto* antidiag_cmd = app.add_subcommand("antidiag", "Function absent from a list of n functions");
    antidiag_cmd->add_option("--shape", shape_text, "NxM")->required();
    antidiag_cmd->add_option("--k", k_list, "Digits of one function; repeat n times")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Entropy trade-off sweep");
    sweep_cmd->add_option("--shape", shape_text, "NxM")->required();
    sweep_cmd->add_option("--stored", stored_text, "Comma-separated stored counts")->required();
    sweep_cmd->add_option("--trials", trials, "Draws per point")->required();
    sweep_cmd->add_option("--seed", seed_text, "Seed")->required();
    sweep_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--threads", threads, "Worker threads; 0 = all cores");
    sweep_cmd->add_flag("--with-replacement", with_replacement, "Allow repeated stored functions");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty())
        reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        if (status == 0)
            return exit_ok;
        err << app.help();
        return exit_malformed_input;
    }

    try {
        if (encode_cmd->parsed()) {
            out << encode(require_function(load_document(file, io))).to_string() << '\n';
        } else if (decode_cmd->parsed()) {
            const FunctionTable table = decode(make_index(shape_text, k_text));
            if (format == "document")
                out << serialize(TableDocument{RelationTable(table), {}, {}});
            else
                out << render_grid(table);
        } else if (number_cmd->parsed()) {
            out << function_number(make_index(shape_text, k_text)).str() << '\n';
        } else if (unnumber_cmd->parsed()) {
            Natural number;
            try {
                if (number_text.empty() ||
                    number_text.find_first_not_of("0123456789") != std::string::npos)
                    throw std::runtime_error("not decimal");
                number = Natural(number_text);
            } catch (const std::exception&) {
                throw InputError("number must be a decimal natural, got '" + number_text + "'");
            }
            const FunctionIndex index = function_from_number(number);
            out << "shape " << index.shape().to_string() << '\n' << "k " << index.to_string() << '\n';
        } else if (shape_cmd->parsed()) {
            if (!table_text.empty()) {
                std::uint64_t i = 0;
                if (table_text.find_first_not_of("0123456789") != std::string::npos)
                    throw InputError("--table must be a decimal natural");
                try {
                    i = std::stoull(table_text);
                } catch (const std::exception&) {
                    throw InputError("--table out of range");
                }
                out << table_shape(i).to_string() << '\n';
            } else {
                out << table_number(TableShape::parse(shape_text)) << '\n';
            }
        } else if (count_cmd->parsed()) {
            out << count_functions(TableShape::parse(shape_text)).str() << '\n';
        } else if (eval_cmd->parsed()) {
            const TableDocument doc = load_document(file, io);
            std::optional<Row> row;
            if (doc.kind() == TableKind::function) {
                row = evaluate(require_function(doc), argument);
            } else {
                if (seed_text.empty())
                    throw InputError("eval on a relation needs --seed");
                Random random(parse_seed(seed_text));
                row = random_evaluate(doc.as_relation(), argument, random);
            }
            out << (row ? value_text(*row, doc, labels) : std::string("undefined")) << '\n';
        } else if (inverse_cmd->parsed()) {
            const TableDocument doc = load_document(file, io);
            out << join(inverse_evaluate_relation(doc.as_relation(), value)) << '\n';
        } else if (entropy_cmd->parsed()) {
            out << format_double(entropy(load_document(file, io).as_relation())) << '\n';
        } else if (superpose_cmd->parsed()) {
            if (files.size() < 2)
                throw InputError("superpose needs at least two documents");
            RelationTable result = load_document(files.front(), io).as_relation();
            for (std::size_t i = 1; i < files.size(); ++i)
                result = superpose(result, load_document(files[i], io).as_relation());
            out << serialize(TableDocument{std::move(result), {}, {}});
        } else if (contains_cmd->parsed()) {
            const RelationTable relation = load_document(file, io).as_relation();
            const FunctionTable function = require_function(load_document(second_file, io));
            out << (contains(relation, function) ? "true" : "false") << '\n';
        } else if (contained_cmd->parsed()) {
            const auto count_mode =
                mode == "partial" ? CountMode::including_partial : CountMode::total_on_support;
            out << count_contained(load_document(file, io).as_relation(), count_mode).str() << '\n';
        } else if (sample_cmd->parsed()) {
            const RelationTable relation = load_document(file, io).as_relation();
            Random random(parse_seed(seed_text));
            for (std::uint64_t i = 0; i < count; ++i)
                out << encode(sample_function(relation, random)).to_string() << '\n';
        } else if (antidiag_cmd->parsed()) {
            std::vector<FunctionIndex> functions;
            for (const auto& k : k_list)
                functions.push_back(make_index(shape_text, k));
            out << anti_diagonal(functions).to_string() << '\n';
        } else if (sweep_cmd->parsed()) {
            ExperimentConfig config;
            config.shape = TableShape::parse(shape_text);
            config.stored_counts = parse_counts(stored_text);
            config.trials = trials;
            config.seed = parse_seed(seed_text);
            config.distinct = !with_replacement;
            const ExperimentReport report = run_sweep(config, threads);
            out << (format == "json" ? emit_json(report) : emit_csv(report));
        }
    } catch (const ParseError& e) {
        err << "tabcomp: malformed input: " << e.what() << '\n';
        return exit_malformed_input;
    } catch (const InputError& e) {
        err << "tabcomp: " << e.what() << '\n';
        return exit_malformed_input;
    } catch (const Error& e) {
        err << "tabcomp: " << e.what() << '\n';
        return exit_domain_error;
    }
    return exit_ok;
}

} // namespace tabcomp
