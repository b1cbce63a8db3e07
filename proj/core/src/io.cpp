#include "flagcodes/io.hpp"

#include <fstream>
#include <sstream>

namespace flagcodes {

namespace {

std::string type_text(const std::vector<std::uint32_t>& dims) {
    std::string s;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(dims[i]);
    }
    return s;
}

void write_header(std::ostream& out, std::uint32_t q, std::uint32_t v,
                  const std::vector<std::uint32_t>& dims, bool cartesian) {
    out << "q=" << q << " v=" << v << " type=" << type_text(dims);
    if (cartesian) out << " cartesian=true";
    out << "\n";
}

void write_words(std::ostream& out, const std::vector<std::vector<Subspace>>& words) {
    for (const auto& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << '|';
            out << w[i].to_text();
        }
        out << "\n";
    }
}

std::vector<std::uint32_t> parse_uint_list(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw ParseError("empty entry in integer list");
        out.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
    }
    return out;
}

}  // namespace

void write_code(std::ostream& out, const FlagCode& code) {
    write_header(out, code.field.q(), code.type.ambient, code.type.dims, false);
    std::vector<std::vector<Subspace>> words;
    words.reserve(code.words.size());
    for (const auto& f : code.words) words.push_back(f.parts);
    write_words(out, words);
}

void write_code(std::ostream& out, const CartesianCode& code) {
    write_header(out, code.field.q(), code.v, code.type.dims, true);
    write_words(out, code.words);
}

template <typename CodeT>
static void write_file_impl(const std::string& path, const CodeT& code) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_code(out, code);
    if (!out) throw IoError("write failure on " + path);
}

void write_code_file(const std::string& path, const FlagCode& code) {
    write_file_impl(path, code);
}
void write_code_file(const std::string& path, const CartesianCode& code) {
    write_file_impl(path, code);
}

Subspace parse_subspace(const std::string& text, const Field& field, std::uint32_t v) {
    if (text == "0") return Subspace(field, v);
    std::vector<std::vector<FieldElement>> rows;
    std::istringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<std::uint32_t> entries = parse_uint_list(row);
        if (entries.size() != v) throw ParseError("subspace row has wrong length");
        for (auto e : entries)
            if (e >= field.q()) throw ParseError("entry out of field range");
        rows.emplace_back(entries.begin(), entries.end());
    }
    return rref_rows(field, v, std::move(rows));
}

CodeFile read_code(std::istream& in) {
    CodeFile file;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty code file");
    std::istringstream hs(line);
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("malformed header token: " + tok);
        std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "q") file.q = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "v") file.v = static_cast<std::uint32_t>(std::stoul(val));
        else if (key == "type") file.type = parse_uint_list(val);
        else if (key == "cartesian") file.cartesian = (val == "true" || val == "1");
        else throw ParseError("unknown header key: " + key);
    }
    if (file.q < 2 || file.v < 2 || file.type.empty()) throw ParseError("incomplete code header");
    Field F = make_field(file.q);
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<Subspace> word;
        std::istringstream ws(line);
        std::string part;
        while (std::getline(ws, part, '|')) word.push_back(parse_subspace(part, F, file.v));
        if (word.size() != file.type.size()) throw ParseError("word has wrong number of subspaces");
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i].dim() != file.type[i]) throw ParseError("word part has wrong dimension");
        file.words.push_back(std::move(word));
    }
    return file;
}

CodeFile read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_code(in);
}

FlagCode to_flag_code(const CodeFile& file) {
    if (file.cartesian) throw ParseError("cartesian code cannot be read as a flag code");
    Field F = make_field(file.q);
    FlagType type(file.v, file.type);
    FlagCode code(F, type);
    for (const auto& w : file.words) code.words.emplace_back(type, w);
    return code;
}

std::vector<MatrixFq> read_group_generators(std::istream& in, std::uint32_t q, std::uint32_t v) {
    Field F = make_field(q);
    std::vector<MatrixFq> gens;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::vector<FieldElement>> rows;
        std::istringstream ss(line);
        std::string row;
        while (std::getline(ss, row, ';')) {
            auto entries = parse_uint_list(row);
            if (entries.size() != v) throw ParseError("generator row has wrong length");
            rows.emplace_back(entries.begin(), entries.end());
        }
        if (rows.size() != v) throw ParseError("generator must be a v x v matrix");
        MatrixFq m(F, v, v);
        for (std::uint32_t i = 0; i < v; ++i)
            for (std::uint32_t j = 0; j < v; ++j) m.set(i, j, rows[i][j]);
        gens.push_back(std::move(m));
    }
    if (gens.empty()) throw ParseError("no generators in file");
    return gens;
}

std::vector<MatrixFq> read_group_generators_file(const std::string& path, std::uint32_t q,
                                                 std::uint32_t v) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_group_generators(in, q, v);
}

std::vector<KnownValue> read_results_cache(std::istream& in) {
    std::vector<KnownValue> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        KnownValue kv;
        std::string type_tok, size_tok;
        if (!(ss >> kv.v >> kv.d >> kv.q >> type_tok >> size_tok))
            throw ParseError("malformed cache line: " + line);
        ss >> kv.source;  // optional
        if (type_tok != "-") kv.type = parse_uint_list(type_tok);
        kv.size = BigInt(size_tok);
        out.push_back(std::move(kv));
    }
    return out;
}

std::vector<KnownValue> read_results_cache_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_results_cache(in);
}

}  // namespace flagcodes
