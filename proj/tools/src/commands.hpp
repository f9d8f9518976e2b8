#ifndef SFX_CLI_COMMANDS_HPP
#define SFX_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "sfx/cli/report.hpp"

namespace sfx::cli {

// Each command fills the report and returns 0 or 1; other outcomes are thrown.
int cmd_validate(const std::string& file, Report& r);
int cmd_extend(const std::string& file, const std::string& out, bool force, Report& r);
int cmd_reduce(const std::string& file, const std::vector<std::string>& ideal, bool balanced, const std::string& out,
               Report& r);
int cmd_extract(const std::string& file, const std::vector<std::string>& ideal, const std::string& out, Report& r);
int cmd_tau(const std::string& file, const std::string& tau, const std::string& out, Report& r);
int cmd_corpus_list(Report& r);
int cmd_corpus_show(const std::string& name, Report& r);

}  // namespace sfx::cli

#endif
