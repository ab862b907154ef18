#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ctvd/graph.hpp"
#include "ctvd/kernelizer.hpp"

namespace ctvd {

class ParseError : public std::runtime_error {
public:
	ParseError(std::size_t line, const std::string &what)
		: std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
	[[nodiscard]] std::size_t line() const { return line_; }

private:
	std::size_t line_;
};

/// Reads "ctvd <n> <m> <k>" followed by m records "u v [mult]" or
/// "loop u [mult]". Blank lines and lines starting with '#' are skipped.
/// Repeated records add up.
Instance read_edge_list(std::istream &in);
Instance read_edge_list_file(const std::string &path);

/// Writes the instance with vertices renumbered 0..n-1 in increasing id
/// order; loops of a vertex precede its edges to larger neighbours.
void write_edge_list(std::ostream &out, const Instance &inst);
std::string to_edge_list(const Instance &inst);

/// Copy with vertices renumbered 0..n-1 in increasing id order.
Instance compact(const Instance &inst);

std::string serialize_trace(const KernelTrace &trace);
KernelTrace parse_trace(std::istream &in);
KernelTrace parse_trace(const std::string &text);

} // namespace ctvd
