#include "ctvd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ctvd {

namespace {

template <typename T>
T parse_number(std::string_view s, std::size_t line, const char *what) {
	T value{};
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (ec != std::errc{} || ptr != s.data() + s.size())
		throw ParseError(line, std::string("bad ") + what + " '" + std::string(s) + "'");
	return value;
}

std::vector<std::string> split(const std::string &line, char sep = ' ') {
	std::vector<std::string> out;
	std::string cur;
	std::istringstream is(line);
	if (sep == ' ') {
		while (is >> cur)
			out.push_back(cur);
		return out;
	}
	while (std::getline(is, cur, sep))
		out.push_back(cur);
	return out;
}

std::string join_ids(const std::vector<VertexId> &vs) {
	if (vs.empty())
		return "-";
	std::string out;
	for (std::size_t i = 0; i < vs.size(); ++i) {
		if (i)
			out += ',';
		out += std::to_string(vs[i]);
	}
	return out;
}

std::vector<VertexId> parse_ids(const std::string &s, std::size_t line) {
	std::vector<VertexId> out;
	if (s == "-")
		return out;
	for (const auto &part : split(s, ','))
		out.push_back(parse_number<VertexId>(part, line, "vertex id"));
	return out;
}

std::string value_of(const std::string &token, const std::string &key, std::size_t line) {
	if (token.size() <= key.size() || token.compare(0, key.size(), key) != 0 || token[key.size()] != '=')
		throw ParseError(line, "expected " + key + "=...");
	return token.substr(key.size() + 1);
}

} // namespace

Instance read_edge_list(std::istream &in) {
	std::string line;
	std::size_t lineno = 0;
	bool have_header = false;
	std::size_t n = 0, m = 0, seen = 0;
	Instance inst;
	while (std::getline(in, line)) {
		++lineno;
		if (!line.empty() && line.back() == '\r')
			line.pop_back();
		const auto tok = split(line);
		if (tok.empty() || tok[0][0] == '#')
			continue;
		if (!have_header) {
			if (tok.size() != 4 || tok[0] != "ctvd")
				throw ParseError(lineno, "expected header 'ctvd <n> <m> <k>'");
			n = parse_number<std::size_t>(tok[1], lineno, "vertex count");
			m = parse_number<std::size_t>(tok[2], lineno, "edge count");
			inst.k = parse_number<std::int64_t>(tok[3], lineno, "budget");
			if (inst.k < 0)
				throw ParseError(lineno, "negative budget");
			inst.graph = MultiGraph(n);
			have_header = true;
			continue;
		}
		const bool is_loop = tok[0] == "loop";
		const std::size_t ends = is_loop ? 1 : 2;
		const std::size_t first = is_loop ? 1 : 0;
		if (tok.size() != first + ends && tok.size() != first + ends + 1)
			throw ParseError(lineno, "malformed edge record");
		const auto u = parse_number<VertexId>(tok[first], lineno, "vertex");
		const auto v = is_loop ? u : parse_number<VertexId>(tok[first + 1], lineno, "vertex");
		if (u >= n || v >= n)
			throw ParseError(lineno, "vertex index out of range");
		if (!is_loop && u == v)
			throw ParseError(lineno, "self-loop must use the 'loop' record");
		std::uint32_t mult = 1;
		if (tok.size() == first + ends + 1)
			mult = parse_number<std::uint32_t>(tok.back(), lineno, "multiplicity");
		if (mult == 0)
			throw ParseError(lineno, "multiplicity must be positive");
		inst.graph.add_edge(u, v, mult);
		++seen;
	}
	if (!have_header)
		throw ParseError(lineno, "missing header");
	if (seen != m)
		throw ParseError(lineno, "header announces " + std::to_string(m) + " edge records, found " + std::to_string(seen));
	return inst;
}

Instance read_edge_list_file(const std::string &path) {
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	return read_edge_list(in);
}

Instance compact(const Instance &inst) {
	const auto vs = inst.graph.vertices();
	std::vector<VertexId> rank(inst.graph.id_bound(), 0);
	for (std::size_t i = 0; i < vs.size(); ++i)
		rank[vs[i]] = static_cast<VertexId>(i);
	Instance out{MultiGraph(vs.size()), inst.k};
	for (VertexId v : vs) {
		if (auto l = inst.graph.loops(v))
			out.graph.add_edge(rank[v], rank[v], l);
		for (const auto &[w, m] : inst.graph.neighbors(v))
			if (w > v)
				out.graph.add_edge(rank[v], rank[w], m);
	}
	return out;
}

void write_edge_list(std::ostream &out, const Instance &inst) {
	const Instance c = compact(inst);
	const auto &g = c.graph;
	out << "ctvd " << g.num_vertices() << ' ' << edge_record_count(g) << ' ' << c.k << '\n';
	for (VertexId v : g.vertices()) {
		if (auto l = g.loops(v)) {
			out << "loop " << v;
			if (l > 1)
				out << ' ' << l;
			out << '\n';
		}
		for (const auto &[w, m] : g.neighbors(v)) {
			if (w < v)
				continue;
			out << v << ' ' << w;
			if (m > 1)
				out << ' ' << m;
			out << '\n';
		}
	}
}

std::string to_edge_list(const Instance &inst) {
	std::ostringstream os;
	write_edge_list(os, inst);
	return os.str();
}

std::string serialize_trace(const KernelTrace &trace) {
	std::ostringstream os;
	os << "ctvd-trace 1\n";
	os << "input n=" << trace.input_n << " m=" << trace.input_m << " k=" << trace.input_k << '\n';
	for (const auto &rec : trace.records) {
		if (const auto *mod = std::get_if<ModulatorRecord>(&rec)) {
			os << "modulator size=" << mod->s.size() << " factor=" << mod->factor << " vertices=" << join_ids(mod->s)
			   << '\n';
			continue;
		}
		const auto &st = std::get<TraceStep>(rec);
		os << "step " << st.index << ' ' << to_string(st.rule) << " k " << st.k_before << ' ' << st.k_after << " del "
		   << join_ids(st.deleted) << " set ";
		if (st.assignments.empty())
			os << '-';
		for (std::size_t i = 0; i < st.assignments.size(); ++i) {
			const auto &e = st.assignments[i];
			os << (i ? "," : "") << e.u << '-' << e.v << '*' << e.mult;
		}
		os << " aux " << join_ids(st.aux) << '\n';
	}
	const auto &o = trace.outcome;
	if (o.no_instance)
		os << "result no-instance reason=" << o.reason << '\n';
	else
		os << "result kernel n=" << o.n << " m=" << o.m << " k=" << o.k << " bound=" << o.bound
		   << " within_bound=" << (o.within_bound ? "yes" : "no") << '\n';
	return os.str();
}

KernelTrace parse_trace(std::istream &in) {
	KernelTrace trace;
	std::string line;
	std::size_t lineno = 0;
	bool have_result = false;
	auto next = [&]() -> std::vector<std::string> {
		if (!std::getline(in, line))
			throw ParseError(lineno + 1, "unexpected end of trace");
		++lineno;
		return split(line);
	};

	if (next() != std::vector<std::string>{"ctvd-trace", "1"})
		throw ParseError(lineno, "expected 'ctvd-trace 1'");
	auto tok = next();
	if (tok.size() != 4 || tok[0] != "input")
		throw ParseError(lineno, "expected input record");
	trace.input_n = parse_number<std::size_t>(value_of(tok[1], "n", lineno), lineno, "n");
	trace.input_m = parse_number<std::size_t>(value_of(tok[2], "m", lineno), lineno, "m");
	trace.input_k = parse_number<std::int64_t>(value_of(tok[3], "k", lineno), lineno, "k");

	while (!have_result) {
		tok = next();
		if (tok.empty())
			throw ParseError(lineno, "empty record");
		if (tok[0] == "modulator") {
			if (tok.size() != 4)
				throw ParseError(lineno, "malformed modulator record");
			ModulatorRecord mod;
			const auto size = parse_number<std::size_t>(value_of(tok[1], "size", lineno), lineno, "size");
			mod.factor = parse_number<int>(value_of(tok[2], "factor", lineno), lineno, "factor");
			mod.s = parse_ids(value_of(tok[3], "vertices", lineno), lineno);
			if (mod.s.size() != size)
				throw ParseError(lineno, "modulator size mismatch");
			trace.records.emplace_back(std::move(mod));
		} else if (tok[0] == "step") {
			if (tok.size() != 12 || tok[3] != "k" || tok[6] != "del" || tok[8] != "set" || tok[10] != "aux")
				throw ParseError(lineno, "malformed step record");
			TraceStep st;
			st.index = parse_number<std::size_t>(tok[1], lineno, "step index");
			auto rule = rule_from_string(tok[2]);
			if (!rule)
				throw ParseError(lineno, "unknown rule '" + tok[2] + "'");
			st.rule = *rule;
			st.k_before = parse_number<std::int64_t>(tok[4], lineno, "k");
			st.k_after = parse_number<std::int64_t>(tok[5], lineno, "k");
			st.deleted = parse_ids(tok[7], lineno);
			if (tok[9] != "-") {
				for (const auto &item : split(tok[9], ',')) {
					const auto dash = item.find('-');
					const auto star = item.find('*');
					if (dash == std::string::npos || star == std::string::npos || star < dash)
						throw ParseError(lineno, "malformed assignment '" + item + "'");
					st.assignments.push_back({parse_number<VertexId>(item.substr(0, dash), lineno, "vertex"),
					                          parse_number<VertexId>(item.substr(dash + 1, star - dash - 1), lineno, "vertex"),
					                          parse_number<std::uint32_t>(item.substr(star + 1), lineno, "multiplicity")});
				}
			}
			st.aux = parse_ids(tok[11], lineno);
			trace.records.emplace_back(std::move(st));
		} else if (tok[0] == "result") {
			have_result = true;
			auto &o = trace.outcome;
			if (tok.size() == 3 && tok[1] == "no-instance") {
				o.no_instance = true;
				o.reason = value_of(tok[2], "reason", lineno);
			} else if (tok.size() == 7 && tok[1] == "kernel") {
				o.n = parse_number<std::size_t>(value_of(tok[2], "n", lineno), lineno, "n");
				o.m = parse_number<std::size_t>(value_of(tok[3], "m", lineno), lineno, "m");
				o.k = parse_number<std::int64_t>(value_of(tok[4], "k", lineno), lineno, "k");
				o.bound = parse_number<std::uint64_t>(value_of(tok[5], "bound", lineno), lineno, "bound");
				const auto within = value_of(tok[6], "within_bound", lineno);
				if (within != "yes" && within != "no")
					throw ParseError(lineno, "within_bound must be yes or no");
				o.within_bound = within == "yes";
			} else {
				throw ParseError(lineno, "malformed result record");
			}
		} else {
			throw ParseError(lineno, "unknown record '" + tok[0] + "'");
		}
	}
	return trace;
}

KernelTrace parse_trace(const std::string &text) {
	std::istringstream is(text);
	return parse_trace(is);
}

} // namespace ctvd
