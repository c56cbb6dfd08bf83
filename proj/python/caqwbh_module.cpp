// pybind11 bindings: hashing, MAC, PRNG and the statistical harness.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstring>

#include "caqwbh/keyed.hpp"
#include "caqwbh/stats.hpp"
#include "caqwbh/vectors.hpp"

namespace py = pybind11;
using namespace caqwbh;

namespace {

Bits bits_from_bytes_obj(const py::bytes& data, std::optional<std::size_t> nbits) {
    std::string_view view = data;
    const auto* p = reinterpret_cast<const std::uint8_t*>(view.data());
    Bits all = Bits::from_bytes(std::span<const std::uint8_t>(p, view.size()));
    if (!nbits) return all;
    if (*nbits > all.size()) {
        throw py::value_error("nbits exceeds the supplied data");
    }
    return all.slice(0, *nbits);
}

py::bytes bits_to_bytes_obj(const Bits& bits) {
    return py::bytes(reinterpret_cast<const char*>(bits.bytes().data()),
                     bits.bytes().size());
}

ControlBlock block_from_bits(const Bits& bits, std::size_t n) {
    if (bits.size() != n) throw SizeMismatch("init block length must equal N");
    std::vector<std::uint8_t> select(n);
    for (std::size_t i = 0; i < n; ++i) select[i] = bits.bit(i) ? 1 : 0;
    return ControlBlock(std::move(select));
}

py::dict diffusion_to_dict(const DiffusionReport& r) {
    py::dict d;
    d["seed"] = r.seed;
    d["trials"] = r.trials;
    d["msg_len_bits"] = r.msg_len_bits;
    d["n_bits"] = r.n_bits;
    d["b_min"] = r.b_min;
    d["b_max"] = r.b_max;
    d["b_mean"] = r.b_mean;
    d["p_mean_percent"] = r.p_mean_percent;
    d["delta_b"] = r.delta_b;
    d["delta_p_percent"] = r.delta_p_percent;
    return d;
}

} // namespace

PYBIND11_MODULE(caqwbh, m) {
    m.doc() = "Controlled alternate quantum walk block hash (CAQWBH): "
              "hashing, MAC, PRNG and statistical tests";

    py::register_exception<Error>(m, "CaqwbhError", PyExc_ValueError);

    py::class_<HashParams>(m, "Params")
        .def_static("caqwbh256", &HashParams::caqwbh256,
                    "CAQWBH-256: N=32, k=8, cos(theta1)=3/5, cos(theta2)=8/17")
        .def_static("caqwbh512", &HashParams::caqwbh512)
        .def_static(
            "custom",
            [](unsigned q, unsigned k, double theta1, double theta2,
               std::optional<std::vector<Amplitude>> alpha) {
                HashParams p = HashParams::custom(q, k, theta1, theta2,
                                                  alpha.value_or(std::vector<Amplitude>{}));
                validate_params(p);
                return p;
            },
            py::arg("q"), py::arg("k"), py::arg("theta1"), py::arg("theta2"),
            py::arg("alpha") = std::nullopt)
        .def_readonly("q", &HashParams::q)
        .def_readonly("k", &HashParams::k)
        .def_readonly("theta1", &HashParams::theta1)
        .def_readonly("theta2", &HashParams::theta2)
        .def_property_readonly("n", &HashParams::block_bits)
        .def_property_readonly("digest_bits", &HashParams::digest_bits)
        .def_property_readonly("alpha",
                               [](const HashParams& p) { return p.alpha; })
        .def("__repr__", [](const HashParams& p) {
            return "Params(q=" + std::to_string(p.q) + ", k=" + std::to_string(p.k) +
                   ", digest_bits=" + std::to_string(p.digest_bits()) + ")";
        });

    m.def(
        "hash_bytes",
        [](const HashParams& params, const py::bytes& data,
           std::optional<std::size_t> nbits) {
            return bits_to_bytes_obj(hash(params, bits_from_bytes_obj(data, nbits)));
        },
        py::arg("params"), py::arg("data"), py::arg("nbits") = std::nullopt,
        "Digest as bytes; nbits restricts the message to its first bits");

    m.def(
        "hash_hex",
        [](const HashParams& params, const py::bytes& data,
           std::optional<std::size_t> nbits) {
            return hash(params, bits_from_bytes_obj(data, nbits)).to_hex();
        },
        py::arg("params"), py::arg("data"), py::arg("nbits") = std::nullopt,
        "Digest as lowercase hex");

    m.def(
        "mac_hex",
        [](const HashParams& params, const std::vector<Amplitude>& key1,
           const py::bytes& key2, std::optional<std::size_t> key2_bits,
           const py::bytes& data) {
            MacKey key;
            key.key1 = key1;
            key.key2 = bits_from_bytes_obj(key2, key2_bits);
            return mac(params, key, bits_from_bytes_obj(data, std::nullopt)).to_hex();
        },
        py::arg("params"), py::arg("key1"), py::arg("key2"),
        py::arg("key2_bits") = std::nullopt, py::arg("data") = py::bytes(),
        "Authentication tag as lowercase hex");

    py::class_<Prng>(m, "Prng")
        .def(py::init([](const HashParams& params, const py::bytes& init_block,
                         std::optional<std::vector<Amplitude>> alpha) {
                 const Bits bits =
                     bits_from_bytes_obj(init_block, params.block_bits());
                 const std::vector<Amplitude> a =
                     alpha.value_or(std::vector<Amplitude>{});
                 return Prng(params, a, block_from_bits(bits, params.block_bits()));
             }),
             py::arg("params"), py::arg("init_block"), py::arg("alpha") = std::nullopt,
             "init_block supplies the first N control bits")
        .def_property_readonly("bits_per_block", &Prng::bits_per_block)
        .def("next_block",
             [](Prng& p) { return bits_to_bytes_obj(p.next_block()); })
        .def(
            "fill",
            [](Prng& p, std::size_t nbits) {
                if (nbits % 8 != 0) {
                    throw py::value_error("fill() returns bytes; nbits must be a "
                                          "multiple of 8");
                }
                return bits_to_bytes_obj(p.fill(nbits));
            },
            py::arg("nbits"));

    m.def(
        "sensitivity",
        [](const HashParams& params, const py::bytes& data,
           std::optional<std::size_t> nbits, std::uint64_t seed) {
            TrialRng rng(seed);
            const SensitivityReport r =
                sensitivity_report(params, bits_from_bytes_obj(data, nbits), rng);
            py::dict d;
            d["digests"] = py::dict(
                py::arg("original") = r.digests[0].to_hex(),
                py::arg("flip") = r.digests[1].to_hex(),
                py::arg("delete") = r.digests[2].to_hex(),
                py::arg("insert") = r.digests[3].to_hex());
            d["changed_bits"] =
                py::make_tuple(r.changed_bits[0], r.changed_bits[1], r.changed_bits[2]);
            d["n_bits"] = r.n_bits;
            return d;
        },
        py::arg("params"), py::arg("data"), py::arg("nbits") = std::nullopt,
        py::arg("seed") = 0,
        "Digests of the message and its flip/delete/insert mutants");

    m.def(
        "diffusion_test",
        [](const HashParams& params, std::size_t trials, std::size_t msg_len_bits,
           std::uint64_t seed, unsigned jobs) {
            return diffusion_to_dict(
                diffusion_confusion(params, trials, msg_len_bits, seed, jobs));
        },
        py::arg("params"), py::arg("trials"), py::arg("msg_len_bits") = 1024,
        py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def(
        "uniformity_test",
        [](const HashParams& params, std::size_t trials, std::size_t msg_len_bits,
           std::uint64_t seed, unsigned jobs) {
            const UniformityReport r =
                uniformity(params, trials, msg_len_bits, seed, jobs);
            py::dict d;
            d["seed"] = r.seed;
            d["trials"] = r.trials;
            d["n_bits"] = r.n_bits;
            d["per_location"] = r.per_location;
            d["mean_count"] = r.mean_count;
            return d;
        },
        py::arg("params"), py::arg("trials"), py::arg("msg_len_bits") = 1024,
        py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def(
        "collision_test",
        [](const HashParams& params, std::size_t trials, std::size_t msg_len_bits,
           std::uint64_t seed, unsigned jobs) {
            const CollisionReport r =
                collision_test(params, trials, msg_len_bits, seed, jobs);
            py::dict d;
            d["seed"] = r.seed;
            d["trials"] = r.trials;
            d["n_bytes"] = r.n_bytes;
            d["observed"] = r.counts;
            d["theory"] = r.theory;
            return d;
        },
        py::arg("params"), py::arg("trials"), py::arg("msg_len_bits") = 1024,
        py::arg("seed") = 0, py::arg("jobs") = 1);

    m.def("omega",
          [](const py::bytes& a, const py::bytes& b) {
              return omega(bits_from_bytes_obj(a, std::nullopt),
                           bits_from_bytes_obj(b, std::nullopt));
          },
          py::arg("a"), py::arg("b"),
          "Number of equal bytes at equal positions");

    m.def("w_theoretical", &w_theoretical, py::arg("trials"), py::arg("n"),
          py::arg("omega"),
          "Expected draw count with omega matching bytes out of n");

    m.def("birthday_bound", &birthday_bound, py::arg("n_bits"));
    m.def("birthday_bound_exact", &birthday_bound_exact, py::arg("n_bits"));

    m.attr("__version__") = "1.0.0";
}
