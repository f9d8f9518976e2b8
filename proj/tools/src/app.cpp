#include "sfx/cli/app.hpp"

#include <unistd.h>

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "sfx/errors.hpp"
#include "sfx/superlinalg/linsolve.hpp"

namespace sfx::cli {

namespace {

std::vector<std::string> split_labels(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

Environment environment_from_process() {
    const char* c = std::getenv("SFX_COLOR");
    if (c && std::string(c) == "0") return {false};
    if (c && *c) return {true};
    return {isatty(STDOUT_FILENO) == 1};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env) {
    CLI::App app{"Double extensions of quasi-Frobenius Lie superalgebras", "sfx"};
    app.fallthrough();
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Print a machine-readable JSON report");

    std::string file, out_path, ideal, tau, name;
    bool balanced = false, force = false;

    auto* validate = app.add_subcommand("validate", "Check an algebra or extension document");
    validate->add_option("file", file, "Document path or corpus name")->required();

    auto* extend = app.add_subcommand("extend", "Build the standard model of an extension document");
    extend->add_option("file", file, "Extension document")->required();
    extend->add_option("--out", out_path, "Write the built algebra document here");
    extend->add_flag("--force", force, "Assemble the model even when conditions fail");

    auto* reduce = app.add_subcommand("reduce", "Symplectic reduction j-perp / j");
    reduce->add_option("file", file, "Algebra (or extension) document")->required();
    auto* ideal_opt = reduce->add_option("--ideal", ideal, "Comma-separated basis labels spanning j");
    auto* bal_opt = reduce->add_flag("--balanced", balanced, "Use j = z meet z-perp for the center z");
    ideal_opt->excludes(bal_opt);
    reduce->add_option("--out", out_path, "Write the reduced algebra document here");

    auto* extract = app.add_subcommand("extract", "Recover extension data from an algebra and a central ideal");
    extract->add_option("file", file, "Algebra (or extension) document")->required();
    extract->add_option("--ideal", ideal, "Comma-separated basis labels spanning j")->required();
    extract->add_option("--out", out_path, "Write the extension document here");

    auto* tau_cmd = app.add_subcommand("tau", "Transform extension data by tau : l -> a");
    tau_cmd->add_option("file", file, "Extension document")->required();
    tau_cmd->add_option("--tau", tau, "tau as a sum of c e_i⊗L_m*")->required();
    tau_cmd->add_option("--out", out_path, "Write the transformed document here");

    auto* corpus_cmd = app.add_subcommand("corpus", "Bundled example documents");
    corpus_cmd->require_subcommand(1);
    corpus_cmd->add_subcommand("list", "List bundled documents");
    auto* show = corpus_cmd->add_subcommand("show", "Print a bundled document");
    show->add_option("name", name, "Corpus entry")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }
    if (reduce->parsed() && !balanced && ideal.empty()) {
        err << "sfx reduce: one of --ideal or --balanced is required\n";
        return kUsage;
    }

    Report report(env.color && !as_json);
    int code = kPass;
    std::string error;
    try {
        if (validate->parsed())
            code = cmd_validate(file, report);
        else if (extend->parsed())
            code = cmd_extend(file, out_path, force, report);
        else if (reduce->parsed())
            code = cmd_reduce(file, split_labels(ideal), balanced, out_path, report);
        else if (extract->parsed())
            code = cmd_extract(file, split_labels(ideal), out_path, report);
        else if (tau_cmd->parsed())
            code = cmd_tau(file, tau, out_path, report);
        else if (show->parsed())
            code = cmd_corpus_show(name, report);
        else
            code = cmd_corpus_list(report);
    } catch (const ParseError& e) {
        code = kParseFailure;
        error = std::string("parse error: ") + e.what();
        if (e.line() > 0 && std::string(e.what()).rfind("line ", 0) != 0)
            error = "parse error at line " + std::to_string(e.line()) + ", column " + std::to_string(e.column()) + ": " +
                    e.what();
    } catch (const ValidationError& e) {
        code = kValidationFailure;
        error = e.what();
    } catch (const PreconditionError& e) {
        code = kUsage;
        error = e.what();
    } catch (const InconsistentSystem& e) {
        code = kValidationFailure;
        error = e.what();
    } catch (const std::invalid_argument& e) {
        code = kUsage;
        error = e.what();
    }

    if (as_json) {
        json j = report.data();
        j["exit_code"] = code;
        if (!error.empty()) j["error"] = error;
        out << j.dump(2) << "\n";
    } else {
        out << report.text();
        if (!error.empty()) err << "sfx: " << error << "\n";
    }
    return code;
}

}  // namespace sfx::cli
