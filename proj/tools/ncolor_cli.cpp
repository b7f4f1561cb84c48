// Command-line front end: sequences, enumeration, bijection application
// and the cross-verification harness.
//
// Exit codes: 0 success, 1 failed check or internal error, 2 grammar or
// validation error in an input, 3 method/constraint mismatch, 4 enumeration
// cap exceeded, 5 bijection domain violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncolor/bijections.hpp"
#include "ncolor/closed_form.hpp"
#include "ncolor/composition.hpp"
#include "ncolor/constraint.hpp"
#include "ncolor/enumerate.hpp"
#include "ncolor/recurrence.hpp"
#include "ncolor/verify.hpp"

namespace {

using namespace ncolor;

constexpr int kExitFailure = 1;
constexpr int kExitGrammar = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitCap = 4;
constexpr int kExitDomain = 5;

class MethodMismatchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int enumeration_cap() {
    const char* env = std::getenv("NCOLOR_ENUM_CAP");
    if (env == nullptr || *env == '\0') {
        return kDefaultEnumerationCap;
    }
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 0 || value > 1000) {
        throw std::invalid_argument("NCOLOR_ENUM_CAP must be an integer in 0..1000");
    }
    return static_cast<int>(value);
}

struct SeqOptions {
    std::string constraint;
    int n = 0;
    std::string method = "auto";
    bool json = false;
};

struct ListOptions {
    std::string constraint;
    int n = 0;
    std::optional<int> parts;
    std::string format = "text";
};

struct MapOptions {
    std::string name;
    std::string direction;
    std::string input;
    std::optional<int> c;
    std::optional<int> b;
    std::optional<int> d;
    std::optional<int> m;
    std::optional<int> i;
    std::optional<int> n;
    std::optional<long long> length;
};

struct CheckOptions {
    int max_n = 12;
    std::string grid_file;
    bool json = false;
};

std::vector<BigInt> sequence_values(const ColorConstraint& constraint, int n,
                                    const std::string& method, int cap) {
    if (method == "enum") {
        return seq_enumerated(constraint, n, cap).values;
    }
    if (method == "rec") {
        auto seq = recurrence_for(constraint, n);
        if (!seq) {
            throw MethodMismatchError("no recurrence covers '" + constraint.describe() + "'");
        }
        return std::move(seq->values);
    }
    if (method == "formula") {
        auto seq = closed_form_sequence(constraint, n);
        if (!seq) {
            throw MethodMismatchError("no closed form covers '" + constraint.describe() + "'");
        }
        return std::move(seq->values);
    }
    // auto: fastest exact method first; the verify harness shows they agree.
    if (auto seq = closed_form_sequence(constraint, n)) {
        return std::move(seq->values);
    }
    if (auto seq = recurrence_for(constraint, n)) {
        return std::move(seq->values);
    }
    return sequence_values(constraint, n, "enum", cap);
}

int run_seq(const SeqOptions& opt, int cap) {
    const ColorConstraint constraint = ColorConstraint::parse(opt.constraint);
    if (opt.n < 0) {
        throw std::invalid_argument("--n must be nonnegative");
    }
    const std::vector<BigInt> values = sequence_values(constraint, opt.n, opt.method, cap);
    if (opt.json) {
        nlohmann::json out = nlohmann::json::array();
        for (const BigInt& value : values) {
            out.push_back(value.str());
        }
        std::cout << out.dump() << '\n';
    } else {
        for (const BigInt& value : values) {
            std::cout << value.str() << '\n';
        }
    }
    return 0;
}

int run_list(const ListOptions& opt, int cap) {
    const ColorConstraint constraint = ColorConstraint::parse(opt.constraint);
    const EnumerationRequest req{opt.n, constraint, opt.parts, cap};
    if (opt.format == "json") {
        nlohmann::json out = nlohmann::json::array();
        enumerate_colored(req, [&out](const ColoredComposition& comp) {
            out.push_back(composition_json(comp));
        });
        std::cout << out.dump() << '\n';
        return 0;
    }
    const bool tiling = opt.format == "tiling";
    enumerate_colored(req, [tiling](const ColoredComposition& comp) {
        std::cout << (tiling ? render_tiling(comp) : format_composition(comp)) << '\n';
    });
    return 0;
}

int require_param(const std::optional<int>& value, const char* flag) {
    if (!value) {
        throw std::invalid_argument(std::string("this map requires ") + flag);
    }
    return *value;
}

std::vector<long long> parse_marks(std::string_view text) {
    const RegularComposition parsed = parse_regular(text);
    if (!parsed.tags.empty()) {
        throw std::invalid_argument("marks must be plain integers");
    }
    return parsed.parts;
}

std::string marks_text(const std::vector<long long>& marks) {
    std::string out;
    for (long long mark : marks) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(mark);
    }
    return out;
}

int run_map(const MapOptions& opt) {
    const bool forward = opt.direction == "fwd";
    std::string output;

    if (opt.name == "prop5-minparts") {
        const int c = require_param(opt.c, "--c");
        output = forward ? format_regular(strip_single_color(parse_composition(opt.input), c))
                         : format_composition(attach_single_color(parse_regular(opt.input), c));
    } else if (opt.name == "prop5-onec") {
        const int c = require_param(opt.c, "--c");
        output = forward ? format_regular(split_single_color(parse_composition(opt.input), c))
                         : format_composition(merge_single_color(parse_regular(opt.input), c));
    } else if (opt.name == "prop7-typed") {
        const int b = require_param(opt.b, "--b");
        const int c = require_param(opt.c, "--c");
        output = forward ? format_regular(strip_two_colors(parse_composition(opt.input), b, c))
                         : format_composition(attach_two_colors(parse_regular(opt.input), b, c));
    } else if (opt.name == "prop7-mixed") {
        const int b = require_param(opt.b, "--b");
        const int c = require_param(opt.c, "--c");
        output = forward ? format_regular(split_two_colors(parse_composition(opt.input), b, c))
                         : format_composition(merge_two_colors(parse_regular(opt.input), b, c));
    } else if (opt.name == "prop11") {
        const int d = require_param(opt.d, "--d");
        output = forward
                     ? format_regular(shift_prohibited_prefix(parse_composition(opt.input), d))
                     : format_composition(unshift_prohibited_prefix(parse_regular(opt.input), d));
    } else if (opt.name == "prop12-rect") {
        if (forward) {
            if (!opt.length) {
                throw std::invalid_argument("this map requires --length");
            }
            const MarkedRectangle rect{*opt.length, parse_marks(opt.input)};
            output = format_composition(rectangle_to_composition(rect));
        } else {
            output = marks_text(composition_to_rectangle(parse_composition(opt.input)).marks);
        }
    } else if (opt.name == "prop13-mod3") {
        output = forward ? format_regular(expand_no_color2(parse_composition(opt.input)))
                         : format_composition(collapse_no_color2(parse_regular(opt.input)));
    } else if (opt.name == "prop14-binary") {
        const int m = require_param(opt.m, "--m");
        const int i = require_param(opt.i, "--i");
        if (forward) {
            output = binary_from_modular(parse_composition(opt.input), m, i);
        } else {
            for (char bit : opt.input) {
                if (bit != '0' && bit != '1') {
                    throw ParseError("expected a binary string", 0);
                }
            }
            output = format_composition(modular_from_binary(opt.input, m, i));
        }
    } else if (opt.name == "prop15-odd") {
        if (forward) {
            const int target = require_param(opt.n, "--n");
            const ColoredComposition comp = parse_composition(opt.input);
            if (comp.sum() != target && comp.sum() != target - 1) {
                throw DomainError("input must sum to n or n-1");
            }
            output = format_composition(odd_from_no_one_one(comp, comp.sum() == target - 1));
        } else {
            output = format_composition(no_one_one_from_odd(parse_composition(opt.input)).first);
        }
    } else {
        throw std::invalid_argument("unknown bijection '" + opt.name + "'");
    }
    std::cout << output << '\n';
    return 0;
}

int run_verify(const CheckOptions& opt, int cap) {
    if (opt.max_n < 0) {
        throw std::invalid_argument("--max-n must be nonnegative");
    }
    if (opt.max_n > cap) {
        throw CapExceededError(opt.max_n, cap);
    }
    std::vector<ColorConstraint> grid;
    if (opt.grid_file.empty()) {
        grid = default_grid();
    } else {
        std::ifstream in(opt.grid_file);
        if (!in) {
            throw std::invalid_argument("cannot open grid file '" + opt.grid_file + "'");
        }
        nlohmann::json data;
        in >> data;
        grid = grid_from_json(data);
    }
    const CheckReport report = run_check(opt.max_n, grid);
    if (opt.json) {
        std::cout << report_json(report).dump(2) << '\n';
    } else {
        std::cout << report_summary(report);
    }
    return report.overall ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"color-restricted n-color compositions: count, list, map, cross-check"};
    app.require_subcommand(1);

    SeqOptions seq_opt;
    CLI::App* seq = app.add_subcommand("seq", "print a(0..N) for a constraint");
    seq->add_option("--constraint", seq_opt.constraint, "all | allow=L | forbid=L | mod=M:L | no11")
        ->required();
    seq->add_option("--n", seq_opt.n, "horizon N")->required()->check(CLI::Range(0, 20000));
    seq->add_option("--method", seq_opt.method, "enum | rec | formula | auto")
        ->check(CLI::IsMember({"enum", "rec", "formula", "auto"}));
    seq->add_flag("--json", seq_opt.json, "emit a JSON array of decimal strings");

    ListOptions list_opt;
    CLI::App* list = app.add_subcommand("list", "enumerate the compositions of n");
    list->add_option("--constraint", list_opt.constraint, "constraint text")->required();
    list->add_option("--n", list_opt.n, "sum n")->required();
    list->add_option("--m", list_opt.parts, "exact number of parts");
    list->add_option("--format", list_opt.format, "text | json | tiling")
        ->check(CLI::IsMember({"text", "json", "tiling"}));

    MapOptions map_opt;
    CLI::App* map = app.add_subcommand("map", "apply a bijection to one object");
    map->add_option("name", map_opt.name, "bijection name (prop5-minparts .. prop15-odd)")
        ->required();
    map->add_option("direction", map_opt.direction, "fwd | inv")
        ->required()
        ->check(CLI::IsMember({"fwd", "inv"}));
    map->add_option("input", map_opt.input, "object text (composition, parts, bits or marks)")
        ->required();
    map->add_option("--c", map_opt.c, "color c");
    map->add_option("--b", map_opt.b, "color b");
    map->add_option("--d", map_opt.d, "prohibited prefix bound d");
    map->add_option("--m", map_opt.m, "modulus m");
    map->add_option("--i", map_opt.i, "residue i");
    map->add_option("--n", map_opt.n, "target sum (prop15-odd fwd)");
    map->add_option("--length", map_opt.length, "rectangle length (prop12-rect fwd)")
        ->check(CLI::Range(0LL, 1'000'000LL));

    CheckOptions check_opt;
    CLI::App* check = app.add_subcommand("check", "run the cross-verification harness");
    check->add_option("--max-n", check_opt.max_n, "largest n to verify");
    check->add_option("--grid", check_opt.grid_file, "JSON file with constraint strings");
    check->add_flag("--json", check_opt.json, "emit the machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitGrammar;
    }

    try {
        const int cap = enumeration_cap();
        if (seq->parsed()) {
            return run_seq(seq_opt, cap);
        }
        if (list->parsed()) {
            return run_list(list_opt, cap);
        }
        if (map->parsed()) {
            return run_map(map_opt);
        }
        return run_verify(check_opt, cap);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (position " << e.position() << ")\n";
        return kExitGrammar;
    } catch (const MethodMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitGrammar;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
