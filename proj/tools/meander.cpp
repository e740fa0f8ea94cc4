// meander: command-line front end for the meander library.
//
// Exit codes: 0 success, 1 invalid input, 2 assertion failure or failed
// verification, 3 I/O error. Machine output goes to stdout, diagnostics to
// stderr.

#include "meander/certificate.hpp"
#include "meander/svg.hpp"
#include "meander/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace meander;

enum Exit { Ok = 0, Invalid = 1, Assertion = 2, Io = 3 };

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw IoError("cannot write " + path.string());
}

bool has_faces(const std::string &text) {
    auto lines = detail::tokenize_lines(text);
    for (const auto &l : lines)
        if (l.words[0] == "face")
            return true;
    return false;
}

int cmd_validate(const std::string &file) {
    const auto text = read_file(file);
    try {
        auto shape = parse_shape(text);
        std::cout << "valid " << describe(shape) << "\n";
        return Ok;
    } catch (const ParseError &e) {
        std::cout << "invalid\n";
        std::cerr << file << ": " << e.what() << "\n";
        return Invalid;
    }
}

int cmd_index(const std::string &file) {
    auto shape = parse_shape(read_file(file));
    auto t = maslov_indices(shape);
    std::cout << "mu";
    for (int v : t.mu)
        std::cout << ' ' << v;
    std::cout << "\nmax " << t.mu_max << "\nmin " << t.mu_min << "\ngap " << t.gap << "\n";
    return Ok;
}

int cmd_faces(const std::string &file) {
    const auto text = read_file(file);
    std::optional<Meander> m;
    MeanderShape shape;
    if (has_faces(text)) {
        m = parse(text);
        shape = m->shape;
    } else {
        shape = parse_shape(text);
    }
    const auto fs = build_faces(shape);
    for (int f = 0; f < face_count(shape.n); ++f) {
        const auto &info = fs.faces[f];
        std::cout << to_string(info.id) << " side=" << side_char(info.side) << " depth=" << info.depth
                  << " below=" << (info.below_curve ? "yes" : "no") << " span=(" << info.span.left << ","
                  << info.span.right << ")";
        if (m)
            std::cout << " area=" << to_string(m->areas[f]);
        std::cout << "\n";
    }
    return Ok;
}

int cmd_untangle(const std::string &file, const std::string &trace_dir) {
    auto m = parse(read_file(file));
    auto cert = untangle(m);
    if (!trace_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(trace_dir, ec);
        if (ec)
            throw IoError("cannot create " + trace_dir + ": " + ec.message());
        for (std::size_t i = 0; i < cert.trace.size(); ++i) {
            char name[32];
            std::snprintf(name, sizeof name, "step-%03zu.meander", i);
            write_file(std::filesystem::path(trace_dir) / name, cert.trace[i]);
        }
    }
    std::cout << format_certificate(cert);
    if (!cert.pass) {
        std::cerr << "untangle: " << cert.failure << "\n";
        return Assertion;
    }
    return Ok;
}

int cmd_enumerate(int n, const std::string &s0) {
    if (s0 != "+" && s0 != "-")
        throw PreconditionViolated("--s0 must be + or -");
    for (const auto &s : enumerate_shapes(n, s0 == "+" ? Side::Up : Side::Down)) {
        for (int p : s.perm)
            std::cout << p << ' ';
        std::cout << s0 << "\n";
    }
    return Ok;
}

int cmd_verify(int max_n, int per_shape, std::uint64_t seed) {
    if (max_n < 1 || per_shape < 1)
        throw PreconditionViolated("--max-n and --areas-per-shape must be positive");
    if (max_n > enumeration_limit())
        throw ResourceLimit("--max-n exceeds MEANDER_MAX_N");
    auto results = run_acceptance(VerifyOptions::up_to(max_n, per_shape, seed));
    print_summary(std::cout, results);
    long failures = 0;
    for (const auto &r : results)
        failures += r.failures;
    std::cout << "total failures " << failures << "\n";
    return failures == 0 ? Ok : Assertion;
}

int cmd_render(const std::string &file, const std::string &out) {
    auto m = parse(read_file(file));
    write_file(out, render_svg(m));
    return Ok;
}

std::string stamp_line() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return std::string("# generated ") + buf + "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Combinatorial diameters: validation, Maslov indices, untangling certificates"};
    app.require_subcommand(1);
    bool stamp = false;
    app.add_flag("--stamp", stamp, "Prefix output with a generation timestamp comment");

    std::string file, trace_dir, out, s0;
    int n = 0, max_n = 0, per_shape = 3;
    std::uint64_t seed = 1;

    auto *validate_cmd = app.add_subcommand("validate", "Check a meander file");
    validate_cmd->add_option("FILE", file)->required();
    auto *index_cmd = app.add_subcommand("index", "Print Maslov indices along L");
    index_cmd->add_option("FILE", file)->required();
    auto *faces_cmd = app.add_subcommand("faces", "List faces with side, depth and area");
    faces_cmd->add_option("FILE", file)->required();
    auto *untangle_cmd = app.add_subcommand("untangle", "Untangle and print the certificate");
    untangle_cmd->add_option("FILE", file)->required();
    untangle_cmd->add_option("--trace", trace_dir, "Write intermediate meanders into DIR");
    auto *enumerate_cmd = app.add_subcommand("enumerate", "List all shapes with K crossings");
    enumerate_cmd->add_option("--n", n)->required();
    enumerate_cmd->add_option("--s0", s0)->required();
    auto *verify_cmd = app.add_subcommand("verify", "Run the acceptance property suite");
    verify_cmd->add_option("--max-n", max_n)->required();
    verify_cmd->add_option("--areas-per-shape", per_shape);
    verify_cmd->add_option("--seed", seed);
    auto *render_cmd = app.add_subcommand("render", "Draw a meander as SVG");
    render_cmd->add_option("FILE", file)->required();
    render_cmd->add_option("--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? Ok : Invalid;
    }

    try {
        if (stamp)
            std::cout << stamp_line();
        if (*validate_cmd)
            return cmd_validate(file);
        if (*index_cmd)
            return cmd_index(file);
        if (*faces_cmd)
            return cmd_faces(file);
        if (*untangle_cmd)
            return cmd_untangle(file, trace_dir);
        if (*enumerate_cmd)
            return cmd_enumerate(n, s0);
        if (*verify_cmd)
            return cmd_verify(max_n, per_shape, seed);
        if (*render_cmd)
            return cmd_render(file, out);
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Io;
    } catch (const AssertionFailure &e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return Assertion;
    } catch (const NeighborMissing &e) {
        std::cerr << "assertion failure: " << e.what() << "\n";
        return Assertion;
    } catch (const Error &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return Invalid;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return Assertion;
    }
    return Invalid;
}
