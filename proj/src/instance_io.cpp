#include "rdv/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace rdv {

namespace {

struct Line {
    std::size_t number = 0;
    std::vector<std::string_view> tokens;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank line with comments stripped; false at end of input.
    bool next(Line& out)
    {
        while (std::getline(in_, text_)) {
            ++number_;
            std::string_view view(text_);
            if (auto hash = view.find('#'); hash != std::string_view::npos)
                view = view.substr(0, hash);
            out.number = number_;
            out.tokens.clear();
            std::size_t pos = 0;
            while (pos < view.size()) {
                while (pos < view.size() && std::isspace(static_cast<unsigned char>(view[pos])))
                    ++pos;
                std::size_t end = pos;
                while (end < view.size() && !std::isspace(static_cast<unsigned char>(view[end])))
                    ++end;
                if (end > pos)
                    out.tokens.push_back(view.substr(pos, end - pos));
                pos = end;
            }
            if (!out.tokens.empty())
                return true;
        }
        return false;
    }

    std::size_t line_number() const { return number_; }

private:
    std::istream& in_;
    std::string text_;
    std::size_t number_ = 0;
};

std::int32_t parse_int(const Line& line, std::size_t k)
{
    std::string_view tok = line.tokens[k];
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "expected integer, got '" + std::string(tok) + "'");
    if (value < 0 || value > std::numeric_limits<std::int32_t>::max())
        throw ParseError(line.number, "integer out of range: " + std::string(tok));
    return static_cast<std::int32_t>(value);
}

Line expect(LineReader& reader, std::string_view keyword)
{
    Line line;
    if (!reader.next(line))
        throw ParseError(reader.line_number() + 1, "unexpected end of input, expected '" + std::string(keyword) + "'");
    if (line.tokens.front() != keyword)
        throw ParseError(line.number, "expected '" + std::string(keyword) + "', got '" +
                                          std::string(line.tokens.front()) + "'");
    return line;
}

void expect_arity(const Line& line, std::size_t arity)
{
    if (line.tokens.size() != arity)
        throw ParseError(line.number, "'" + std::string(line.tokens.front()) + "' expects " +
                                          std::to_string(arity - 1) + " values, got " +
                                          std::to_string(line.tokens.size() - 1));
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
{
}

RdvInstance parse_instance(std::istream& in)
{
    LineReader reader(in);

    Line tree = expect(reader, "tree");
    expect_arity(tree, 2);
    const std::int32_t n_nodes = parse_int(tree, 1);

    Line parents_line = expect(reader, "parents");
    expect_arity(parents_line, static_cast<std::size_t>(n_nodes) + 1);
    std::vector<NodeId> parents(static_cast<std::size_t>(n_nodes));
    for (std::size_t k = 0; k < parents.size(); ++k)
        parents[k] = parse_int(parents_line, k + 1) - 1;  // 0 -> kNoNode

    Line header = expect(reader, "vertices");
    expect_arity(header, 3);
    const std::int32_t n = parse_int(header, 1);

    RdvInstance inst;
    inst.tree = HostTree(std::move(parents));
    inst.delta = parse_int(header, 2);
    inst.vertices.reserve(static_cast<std::size_t>(n));
    for (std::int32_t i = 0; i < n; ++i) {
        Line v = expect(reader, "v");
        if (v.tokens.size() < 3)
            throw ParseError(v.number, "'v' expects a top and at least one bottom");
        VertexSubtree s;
        s.top = parse_int(v, 1) - 1;
        for (std::size_t k = 2; k < v.tokens.size(); ++k)
            s.bottoms.push_back(parse_int(v, k) - 1);
        inst.vertices.push_back(std::move(s));
    }

    Line extra;
    if (reader.next(extra))
        throw ParseError(extra.number, "unexpected trailing record '" + std::string(extra.tokens.front()) + "'");
    return inst;
}

RdvInstance parse_instance_string(const std::string& text)
{
    std::istringstream in(text);
    return parse_instance(in);
}

RdvInstance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const RdvInstance& inst)
{
    out << "tree " << inst.tree.size() << '\n';
    out << "parents";
    for (NodeId p : inst.tree.parents())
        out << ' ' << p + 1;
    out << '\n';
    out << "vertices " << inst.vertices.size() << ' ' << inst.delta << '\n';
    for (const auto& v : inst.vertices) {
        out << "v " << v.top + 1;
        for (NodeId b : v.bottoms)
            out << ' ' << b + 1;
        out << '\n';
    }
}

std::string instance_to_string(const RdvInstance& inst)
{
    std::ostringstream out;
    write_instance(out, inst);
    return out.str();
}

void write_matching(std::ostream& out, const Matching& m)
{
    out << "matching " << m.size() << '\n';
    for (auto [a, b] : m.normalized())
        out << "e " << a + 1 << ' ' << b + 1 << '\n';
}

}  // namespace rdv
