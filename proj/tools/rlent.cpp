// rlent - run-length compressed-domain entropy tool for bilevel document
// images. Subcommands: encode, decode, entropy, distmat, trace, bench, gen.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rlent/analysis.hpp"
#include "rlent/bench.hpp"
#include "rlent/entropy.hpp"
#include "rlent/errors.hpp"
#include "rlent/pbm.hpp"
#include "rlent/rle.hpp"
#include "rlent/transitions.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rlent;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (!in.good() && !in.eof()) throw IoError("read failure on " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot create " + path);
    out << data;
    if (!out) throw IoError("write failure on " + path);
}

// Accepts .rld natively; PBM inputs are encoded first.
RLEDocument load_document(const std::string& path) {
    const auto bytes = read_file(path);
    if (bytes.rfind("RLD1", 0) == 0) return read_rld(bytes);
    return encode_image(load_pbm(bytes));
}

Quantifier parse_quantifier(const std::string& s) {
    if (s == "ceq") return Quantifier::CEQ;
    if (s == "seq") return Quantifier::SEQ;
    throw ValidationError("unknown quantifier '" + s + "'");
}

Direction parse_direction(const std::string& s) {
    if (s == "h") return Direction::Horizontal;
    if (s == "v") return Direction::Vertical;
    throw ValidationError("unknown direction '" + s + "'");
}

LogBase parse_base(const std::string& s) {
    if (s == "e") return LogBase::E;
    if (s == "2") return LogBase::Two;
    if (s == "10") return LogBase::Ten;
    throw ValidationError("unknown log base '" + s + "'");
}

struct CommonOpts {
    std::string quantifier = "ceq";
    std::string direction = "h";
    std::string log_base = "e";
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--quantifier", o.quantifier, "ceq|seq")
        ->check(CLI::IsMember({"ceq", "seq"}));
    cmd->add_option("--direction", o.direction, "h|v")
        ->check(CLI::IsMember({"h", "v"}));
    cmd->add_option("--log-base", o.log_base, "e|2|10")
        ->check(CLI::IsMember({"e", "2", "10"}));
    cmd->add_option("--format", o.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

json report_to_json(const BenchReport& r) {
    return json{{"label", r.label},
                {"quantifier", to_string(r.quantifier)},
                {"direction", to_string(r.direction)},
                {"t_compressed", r.t_compressed},
                {"t_uncompressed", r.t_uncompressed},
                {"ratio", r.ratio},
                {"repetitions", r.repetitions},
                {"width", r.width},
                {"height", r.height},
                {"compression_ratio", r.compression_ratio},
                {"include_decode", r.include_decode},
                {"reliable", r.reliable}};
}

int run(int argc, char** argv) {
    CLI::App app{"entropy quantifiers for run-length compressed bilevel images"};
    app.require_subcommand(1);

    // encode
    std::string in_path, out_path;
    auto* enc = app.add_subcommand("encode", "PBM -> .rld");
    enc->add_option("input", in_path, "input .pbm")->required();
    enc->add_option("output", out_path, "output .rld")->required();

    // decode
    std::string variant = "p4";
    auto* dec = app.add_subcommand("decode", ".rld -> PBM");
    dec->add_option("input", in_path, "input .rld")->required();
    dec->add_option("output", out_path, "output .pbm")->required();
    dec->add_option("--variant", variant, "p1|p4")
        ->check(CLI::IsMember({"p1", "p4"}));

    // entropy
    CommonOpts eo;
    bool per_row = false;
    auto* ent = app.add_subcommand("entropy", "compute CEQ/SEQ features");
    ent->add_option("input", in_path, "input .rld or .pbm")->required();
    add_common(ent, eo);
    ent->add_flag("--per-row", per_row, "include per-line contributions");

    // distmat
    CommonOpts dmo;
    std::vector<std::string> dm_inputs;
    auto* dm = app.add_subcommand("distmat", "pairwise |dF3| matrix");
    dm->add_option("inputs", dm_inputs, "two or more .pbm/.rld files")
        ->required()
        ->expected(-2);
    add_common(dm, dmo);

    // trace
    std::uint32_t passes = 10;
    auto* tr = app.add_subcommand("trace", "virtual decompression trace");
    tr->add_option("input", in_path, "input .rld or .pbm")->required();
    tr->add_option("--passes", passes, "number of passes to print");

    // bench
    CommonOpts bo;
    int reps = 9;
    bool include_decode = false;
    auto* bn = app.add_subcommand("bench", "compressed vs uncompressed timing");
    bn->add_option("input", in_path, "input .rld or .pbm")->required();
    add_common(bn, bo);
    bn->add_option("--reps", reps, "repetitions (>= 3)");
    bn->add_flag("--include-decode", include_decode,
                 "charge decode time to the uncompressed path");

    // gen
    std::string kind = "text-like";
    std::int32_t gw = 100, gh = 100;
    double density = 0.1;
    std::uint64_t seed = 42;
    auto* gn = app.add_subcommand("gen", "generate a fixture image");
    gn->add_option("output", out_path, "output .pbm or .rld")->required();
    gn->add_option("--kind", kind, "blank|checkerboard|text-like")
        ->check(CLI::IsMember({"blank", "checkerboard", "text-like"}));
    gn->add_option("--width", gw, "width");
    gn->add_option("--height", gh, "height");
    gn->add_option("--density", density, "ink density in [0,1]");
    gn->add_option("--seed", seed, "rng seed");

    CLI11_PARSE(app, argc, argv);

    if (enc->parsed()) {
        write_file(out_path, write_rld(encode_image(load_pbm(read_file(in_path)))));
    } else if (dec->parsed()) {
        const auto img = decode_image(read_rld(read_file(in_path)));
        write_file(out_path, save_pbm(img, variant == "p1" ? PbmVariant::P1
                                                           : PbmVariant::P4));
    } else if (ent->parsed()) {
        const auto doc = load_document(in_path);
        const auto f = compute_entropy(doc, parse_quantifier(eo.quantifier),
                                       parse_direction(eo.direction),
                                       parse_base(eo.log_base));
        json out{{"F1", f.f1}, {"F2", f.f2}, {"F3", f.f3},
                 {"quantifier", to_string(f.quantifier)},
                 {"direction", to_string(f.direction)},
                 {"log_base", to_string(f.log_base)}};
        if (per_row) {
            json rows = json::array();
            for (const auto& [ep, em] : f.per_line)
                rows.push_back(json{{"Eplus", ep}, {"Eminus", em}});
            out["per_row"] = std::move(rows);
        }
        std::cout << out.dump(2) << "\n";
    } else if (dm->parsed()) {
        std::vector<Sample> samples;
        for (const auto& p : dm_inputs)
            samples.push_back({fs::path(p).stem().string(), load_document(p)});
        const auto m = distance_matrix(samples, parse_quantifier(dmo.quantifier),
                                       parse_direction(dmo.direction),
                                       parse_base(dmo.log_base));
        if (dmo.format == "csv") {
            std::cout << "sample";
            for (const auto& l : m.labels) std::cout << "," << l;
            std::cout << "\n";
            for (std::size_t i = 0; i < m.labels.size(); ++i) {
                std::cout << m.labels[i];
                for (double v : m.values[i])
                    std::cout << "," << std::setprecision(17) << v;
                std::cout << "\n";
            }
        } else {
            std::cout << json{{"labels", m.labels}, {"values", m.values},
                              {"quantifier", to_string(m.quantifier)},
                              {"direction", to_string(m.direction)},
                              {"log_base", to_string(m.log_base)}}
                             .dump(2)
                      << "\n";
        }
    } else if (tr->parsed()) {
        const auto doc = load_document(in_path);
        const auto trace = virtual_decompress_trace(doc, passes);
        std::cout << "Pass\tLine\tPopped\tRuns\tStatus\n";
        for (const auto& rec : trace) {
            std::cout << rec.pass << "\t" << rec.line << ":\t" << int(rec.bit)
                      << "\t";
            for (std::size_t i = 0; i < rec.remaining.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << rec.remaining[i];
            }
            std::cout << "\t" << (rec.shift_pop ? "shift-pop" : "pop") << "\n";
        }
    } else if (bn->parsed()) {
        const auto doc = load_document(in_path);
        const auto r = bench(doc, fs::path(in_path).stem().string(),
                             parse_quantifier(bo.quantifier),
                             parse_direction(bo.direction), reps,
                             parse_base(bo.log_base), include_decode);
        if (bo.format == "csv") {
            std::cout << "label,quantifier,direction,t_compressed,t_uncompressed,"
                         "ratio,repetitions,width,height,compression_ratio,"
                         "include_decode,reliable\n";
            std::cout << r.label << "," << to_string(r.quantifier) << ","
                      << to_string(r.direction) << "," << r.t_compressed << ","
                      << r.t_uncompressed << "," << r.ratio << ","
                      << r.repetitions << "," << r.width << "," << r.height
                      << "," << r.compression_ratio << "," << r.include_decode
                      << "," << r.reliable << "\n";
        } else {
            std::cout << report_to_json(r).dump(2) << "\n";
        }
        if (!r.reliable)
            std::cerr << "warning: measured intervals close to timer resolution; "
                         "report flagged unreliable\n";
    } else if (gn->parsed()) {
        FixtureKind fk = FixtureKind::TextLike;
        if (kind == "blank") fk = FixtureKind::Blank;
        else if (kind == "checkerboard") fk = FixtureKind::Checkerboard;
        const auto img = generate_fixture(fk, gw, gh, density, seed);
        if (fs::path(out_path).extension() == ".rld")
            write_file(out_path, write_rld(encode_image(img)));
        else
            write_file(out_path, save_pbm(img, PbmVariant::P4));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
