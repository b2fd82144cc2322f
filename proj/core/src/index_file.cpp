#include "tsf/index_file.hpp"

#include <cerrno>
#include <fstream>
#include <sstream>
#include <system_error>

namespace tsf {

namespace {

constexpr char kMagic[4] = {'T', 'S', 'F', '1'};

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

class Writer {
public:
    template <typename T>
    void put(T v) {
        for (std::size_t k = 0; k < sizeof(T); ++k) {
            out_.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * k)) & 0xFF));
        }
    }
    void raw(std::string_view s) { out_.append(s); }
    std::string& str() { return out_; }

private:
    std::string out_;
};

class Reader {
public:
    explicit Reader(std::string_view in) : in_(in) {}

    template <typename T>
    T get() {
        need(sizeof(T));
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < sizeof(T); ++k) {
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in_[pos_ + k])) << (8 * k);
        }
        pos_ += sizeof(T);
        return static_cast<T>(v);
    }

    std::string_view raw(std::size_t n) {
        need(n);
        auto s = in_.substr(pos_, n);
        pos_ += n;
        return s;
    }

    std::size_t remaining() const { return in_.size() - pos_; }

private:
    void need(std::size_t n) const {
        if (in_.size() - pos_ < n) throw IndexError("index file truncated");
    }

    std::string_view in_;
    std::size_t pos_ = 0;
};

} // namespace

std::string serialize_index(const ReferenceMachine& machine) {
    const Dawg& d = machine.dawg();
    const DawgParts parts = d.to_parts();
    const auto& g = machine.opt_links().raw();

    Writer w;
    w.raw({kMagic, 4});
    w.put<std::uint32_t>(kIndexVersion);
    w.put<std::uint32_t>(static_cast<std::uint32_t>(d.state_count()));
    w.put<std::uint32_t>(static_cast<std::uint32_t>(d.transition_count()));
    w.put<std::uint16_t>(static_cast<std::uint16_t>(d.alphabet().size()));
    for (Symbol a : d.alphabet()) w.put<std::uint8_t>(a);
    for (std::size_t q = 0; q < d.state_count(); ++q) {
        w.put<std::uint32_t>(parts.links[q]);
        w.put<std::uint32_t>(parts.lengths[q]);
        w.put<std::uint32_t>(g[q]);
        w.put<std::uint32_t>(parts.offsets[q]);
    }
    w.put<std::uint32_t>(parts.offsets.back());
    for (const Transition& t : parts.edges) {
        w.put<std::uint8_t>(t.symbol);
        w.put<std::uint32_t>(t.target.index);
    }
    w.put<std::uint64_t>(fnv1a(w.str()));
    return std::move(w.str());
}

ReferenceMachine deserialize_index(const std::string& bytes) {
    Reader r(bytes);
    if (bytes.size() < 4 || r.raw(4) != std::string_view(kMagic, 4)) {
        throw IndexError("not an index file (bad magic)");
    }
    const auto version = r.get<std::uint32_t>();
    if (version != kIndexVersion) {
        throw IndexError("index version mismatch: expected " + std::to_string(kIndexVersion) +
                         ", found " + std::to_string(version));
    }
    if (bytes.size() < 8 + 4 + 8) throw IndexError("index file truncated");
    const std::string_view body(bytes.data(), bytes.size() - 8);
    Reader tail(std::string_view(bytes).substr(bytes.size() - 8));
    const bool checksum_ok = tail.get<std::uint64_t>() == fnv1a(body);

    const auto n = r.get<std::uint32_t>();
    const auto e = r.get<std::uint32_t>();
    // 16 bytes per state and 5 per edge must fit in what is left.
    if (static_cast<std::uint64_t>(n) * 16 + static_cast<std::uint64_t>(e) * 5 > r.remaining()) {
        throw IndexError("index file truncated");
    }
    if (!checksum_ok) throw IndexError("index checksum mismatch");

    const auto alpha_size = r.get<std::uint16_t>();
    std::vector<Symbol> alphabet(alpha_size);
    for (auto& a : alphabet) a = r.get<std::uint8_t>();

    DawgParts parts;
    std::vector<std::uint32_t> g(n);
    parts.links.resize(n);
    parts.lengths.resize(n);
    parts.offsets.resize(static_cast<std::size_t>(n) + 1);
    for (std::uint32_t q = 0; q < n; ++q) {
        parts.links[q] = r.get<std::uint32_t>();
        parts.lengths[q] = r.get<std::uint32_t>();
        g[q] = r.get<std::uint32_t>();
        parts.offsets[q] = r.get<std::uint32_t>();
    }
    parts.offsets[n] = r.get<std::uint32_t>();
    parts.edges.resize(e);
    for (auto& t : parts.edges) {
        t.symbol = r.get<std::uint8_t>();
        t.target = StateId{r.get<std::uint32_t>()};
    }
    if (r.remaining() != 8) throw IndexError("index file has trailing bytes");

    try {
        Dawg d = Dawg::from_parts(std::move(parts));
        if (d.alphabet() != alphabet) throw IndexError("index alphabet does not match transitions");
        OptLinkTable links = OptLinkTable::from_raw(d, std::move(g));
        return ReferenceMachine(std::move(d), std::move(links));
    } catch (const std::invalid_argument& ex) {
        throw IndexError(std::string("corrupt index: ") + ex.what());
    }
}

void save_index(const ReferenceMachine& machine, const std::filesystem::path& path) {
    const std::string bytes = serialize_index(machine);
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
        }
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            throw std::system_error(errno, std::generic_category(), "cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

ReferenceMachine load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::system_error(errno, std::generic_category(), "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_index(buf.str());
}

} // namespace tsf
