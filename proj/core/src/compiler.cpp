#include "pull/compiler.hpp"

#include <stdexcept>

namespace pull {

// Implemented in the layout milestone; see compiler_layout.cpp once present.
CompiledBoard compile(const CnfFormula&, Variant) {
    throw std::logic_error("compile: not implemented yet");
}

std::vector<bool> extract_assignment(const CompiledBoard&, const std::vector<Move>&) {
    throw std::logic_error("extract_assignment: not implemented yet");
}

std::vector<Move> synthesize_solution(const CompiledBoard&, const std::vector<bool>&) {
    throw std::logic_error("synthesize_solution: not implemented yet");
}

CompileStats stats(const CompiledBoard&) {
    throw std::logic_error("stats: not implemented yet");
}

std::string CompiledBoard::provenance_text() const { return ""; }
std::string CompileStats::text() const { return ""; }

int run_compile_command(const std::string&, const std::string&, const std::string&) {
    throw std::logic_error("compile: not implemented yet");
}

}  // namespace pull
