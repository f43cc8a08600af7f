#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <intdiff/intdiff.hpp>

#include "acceptance.hpp"

namespace {

using namespace intdiff;

constexpr int exit_domain_error = 1;
constexpr int exit_usage_error = 2;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw AlgebraError(ErrorCode::BadDocument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void print_stabilizer(const IdealDescriptor& a, const StabilizerReport& r)
{
    std::cout << "ideal: " << to_string(a) << '\n'
              << "order: " << r.order << '\n'
              << "index: " << r.index << '\n'
              << "generic: ";
    if (r.generic) {
        std::cout << "m=" << r.generic->m << " blocks=[";
        for (std::size_t k = 0; k < r.generic->blocks.size(); ++k)
            std::cout << (k ? ", " : "") << "(" << r.generic->blocks[k].first << "," << r.generic->blocks[k].second
                      << ")";
        std::cout << "]\n";
    } else {
        std::cout << "no\n";
    }
    std::cout << "permutations:\n";
    for (const auto& p : r.permutations)
        std::cout << "  " << to_string(p) << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact arithmetic in the algebra of polynomial integro-differential operators"};
    app.require_subcommand(1);

    std::size_t n = 1;
    std::string expr, other, poly, file_a, file_b, ideal_text;
    bool count_only = false;

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of an expression");
    normalize->add_option("-n", n, "Number of variables")->check(CLI::Range(1, 16));
    normalize->add_option("expr", expr, "Expression")->required();

    auto* mul = app.add_subcommand("mul", "Multiply two expressions");
    mul->add_option("-n", n, "Number of variables")->check(CLI::Range(1, 16));
    mul->add_option("a", expr, "Left factor")->required();
    mul->add_option("b", other, "Right factor")->required();

    auto* star = app.add_subcommand("star", "Apply the involution");
    star->add_option("-n", n, "Number of variables")->check(CLI::Range(1, 16));
    star->add_option("expr", expr, "Expression")->required();

    auto* apply_cmd = app.add_subcommand("apply", "Act on a polynomial in the divided-power basis");
    apply_cmd->add_option("-n", n, "Number of variables")->check(CLI::Range(1, 16));
    apply_cmd->add_option("expr", expr, "Operator")->required();
    apply_cmd->add_option("poly", poly, "Polynomial, e.g. \"2 * x1^[3]\"")->required();

    auto* index = app.add_subcommand("index", "Fredholm index of a one-variable operator");
    index->add_option("expr", expr, "Expression")->required();

    auto* recognize_cmd = app.add_subcommand("recognize", "Canonical form from generator images");
    recognize_cmd->add_option("--images", file_a, "Generator-images document")->required()->check(CLI::ExistingFile);

    auto* invert_cmd = app.add_subcommand("invert-aut", "Invert an automorphism");
    invert_cmd->add_option("--aut", file_a, "Automorphism document")->required()->check(CLI::ExistingFile);

    auto* compose_cmd = app.add_subcommand("compose-aut", "Compose two automorphisms (A after B)");
    compose_cmd->add_option("A", file_a, "Automorphism document")->required()->check(CLI::ExistingFile);
    compose_cmd->add_option("B", file_b, "Automorphism document")->required()->check(CLI::ExistingFile);

    auto* ideals = app.add_subcommand("ideals", "Ideal lattice");
    ideals->require_subcommand(1);
    auto* enumerate_cmd = ideals->add_subcommand("enumerate", "List every ideal");
    enumerate_cmd->add_option("-n", n, "Number of variables")->required()->check(CLI::Range(1, 16));
    enumerate_cmd->add_flag("--count-only", count_only, "Print only the number of ideals");
    auto* stabilizer_cmd = ideals->add_subcommand("stabilizer", "Stabilizer of a proper ideal");
    stabilizer_cmd->add_option("-n", n, "Number of variables")->required()->check(CLI::Range(1, 16));
    stabilizer_cmd->add_option("ideal", ideal_text, "Ideal, e.g. \"min{ {1}, {2,3} }\"")->required();
    auto* invariant_cmd = ideals->add_subcommand("invariant", "Ideals fixed by every automorphism");
    invariant_cmd->add_option("-n", n, "Number of variables")->required()->check(CLI::Range(1, 16));

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage_error;
    }

    try {
        if (*normalize) {
            std::cout << to_string(parse_element(expr, n)) << '\n';
        } else if (*mul) {
            std::cout << to_string(multiply(parse_element(expr, n), parse_element(other, n))) << '\n';
        } else if (*star) {
            std::cout << to_string(involution(parse_element(expr, n))) << '\n';
        } else if (*apply_cmd) {
            std::cout << to_string(apply(parse_element(expr, n), parse_polynomial(poly, n))) << '\n';
        } else if (*index) {
            std::cout << fredholm_index(parse_element(expr, 1)) << '\n';
        } else if (*recognize_cmd) {
            std::cout << to_json(recognize(images_from_json(read_file(file_a)))) << '\n';
        } else if (*invert_cmd) {
            std::cout << to_json(invert(automorphism_from_json(read_file(file_a)))) << '\n';
        } else if (*compose_cmd) {
            std::cout << to_json(compose(automorphism_from_json(read_file(file_a)),
                                         automorphism_from_json(read_file(file_b))))
                      << '\n';
        } else if (*enumerate_cmd) {
            const auto all = enumerate_ideals(n);
            if (count_only)
                std::cout << all.size() << '\n';
            else
                for (const auto& a : all)
                    std::cout << to_string(a) << '\n';
        } else if (*stabilizer_cmd) {
            const auto a = parse_ideal(ideal_text, n);
            print_stabilizer(a, stabilizer(a));
        } else if (*invariant_cmd) {
            for (const auto& a : invariant_ideals(n))
                std::cout << to_string(a) << '\n';
        } else if (*selftest) {
            return intdiff::acceptance::run_and_report(std::cout) == 0 ? 0 : exit_domain_error;
        }
    } catch (const AlgebraError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_domain_error;
    }
    return 0;
}
