#include "bolab/snapshot.hpp"

#include <cstring>
#include <fstream>

#include "bolab/errors.hpp"

namespace bolab {

namespace {

constexpr char kMagic[4] = {'B', 'O', 'F', 'S'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeaderSize = 4 + 4 + 8 + 8 + 8;

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<std::uint8_t>& b, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& b, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    put_u64(b, v);
}

std::uint32_t get_u32(const std::uint8_t* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

double get_f64(const std::uint8_t* p) {
    const std::uint64_t v = get_u64(p);
    double d;
    std::memcpy(&d, &v, 8);
    return d;
}

} // namespace

std::vector<std::uint8_t> snapshot_bytes(const SimState& state) {
    const int n = state.u.grid().size();
    std::vector<std::uint8_t> b;
    b.reserve(kHeaderSize + 8 * static_cast<std::size_t>(n));
    b.insert(b.end(), kMagic, kMagic + 4);
    put_u32(b, kVersion);
    put_u64(b, static_cast<std::uint64_t>(n));
    put_f64(b, state.u.grid().length());
    put_f64(b, state.t);
    for (int j = 0; j < n; ++j) put_f64(b, state.u[j]);
    return b;
}

SimState snapshot_from_bytes(const std::vector<std::uint8_t>& bytes) {
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw ValidationError("not a snapshot (bad magic)");
    if (bytes.size() < kHeaderSize) throw ValidationError("truncated snapshot");
    const std::uint32_t version = get_u32(bytes.data() + 4);
    if (version != kVersion)
        throw ValidationError("unsupported snapshot version " + std::to_string(version));
    const std::uint64_t n64 = get_u64(bytes.data() + 8);
    if (n64 > (1ull << 31)) throw ValidationError("truncated snapshot");
    const std::size_t n = static_cast<std::size_t>(n64);
    if (bytes.size() < kHeaderSize + 8 * n) throw ValidationError("truncated snapshot");
    const double length = get_f64(bytes.data() + 16);
    const double t = get_f64(bytes.data() + 24);

    TorusGrid g(static_cast<int>(n), length);
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j)
        samples[j] = get_f64(bytes.data() + kHeaderSize + 8 * j);
    return SimState{Field(g, std::move(samples)), t};
}

void write_snapshot(const std::string& path, const SimState& state) {
    const auto bytes = snapshot_bytes(state);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot open '" + path + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ValidationError("failed writing '" + path + "'");
}

SimState read_snapshot(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    try {
        return snapshot_from_bytes(bytes);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + " ('" + path + "')");
    }
}

} // namespace bolab
