"""Smoke tests for the caqwbh python module."""

import pytest

import caqwbh


@pytest.fixture(scope="module")
def p256():
    return caqwbh.Params.caqwbh256()


def test_instance_parameters(p256):
    assert p256.q == 5
    assert p256.k == 8
    assert p256.n == 32
    assert p256.digest_bits == 256
    p512 = caqwbh.Params.caqwbh512()
    assert p512.digest_bits == 512


def test_hash_is_deterministic(p256):
    a = caqwbh.hash_hex(p256, b"hello world")
    b = caqwbh.hash_hex(p256, b"hello world")
    assert a == b
    assert len(a) == 64
    assert a != caqwbh.hash_hex(p256, b"hello worle")


def test_hash_bytes_matches_hex(p256):
    digest = caqwbh.hash_bytes(p256, b"abc")
    assert len(digest) == 32
    assert digest.hex() == caqwbh.hash_hex(p256, b"abc")


def test_bit_restricted_message(p256):
    # first 5 bits of 0xff differ from the full byte
    assert caqwbh.hash_hex(p256, b"\xff", nbits=5) != caqwbh.hash_hex(p256, b"\xff")


def test_custom_params_validation():
    with pytest.raises(ValueError):
        caqwbh.Params.custom(5, 8, 0.7853981633974483, 1.1)  # pi/4 is reserved


def test_mac_reduces_to_hash(p256):
    key1 = [1.0 + 0.0j] + [0.0j] * 31
    tag = caqwbh.mac_hex(p256, key1, b"\x00\x00\x00\x00", data=b"abc")
    assert tag == caqwbh.hash_hex(p256, b"abc")


def test_mac_key_sensitivity(p256):
    key1 = [1.0 + 0.0j] + [0.0j] * 31
    t1 = caqwbh.mac_hex(p256, key1, b"\x00\x00\x00\x00", data=b"abc")
    t2 = caqwbh.mac_hex(p256, key1, b"\x80\x00\x00\x00", data=b"abc")
    assert t1 != t2


def test_prng_stream(p256):
    a = caqwbh.Prng(p256, b"\x01\x02\x03\x04")
    b = caqwbh.Prng(p256, b"\x01\x02\x03\x04")
    assert a.fill(1024) == b.fill(1024)
    assert a.bits_per_block == 256
    block = a.next_block()
    assert len(block) == 32
    # the flipped bit sits at a position the first step actually reaches
    c = caqwbh.Prng(p256, b"\x41\x02\x03\x04")
    assert c.next_block() != caqwbh.Prng(p256, b"\x01\x02\x03\x04").next_block()


def test_sensitivity(p256):
    report = caqwbh.sensitivity(p256, b"x" * 128, seed=1)
    assert report["n_bits"] == 256
    assert len(report["digests"]) == 4
    for changed in report["changed_bits"]:
        assert changed >= 64  # at least a quarter of the digest


def test_diffusion_quick(p256):
    r = caqwbh.diffusion_test(p256, trials=200, msg_len_bits=512, seed=3, jobs=2)
    assert r["trials"] == 200
    assert 96 < r["b_mean"] < 160
    serial = caqwbh.diffusion_test(p256, trials=200, msg_len_bits=512, seed=3, jobs=1)
    assert serial["b_mean"] == r["b_mean"]


def test_collision_theory():
    assert caqwbh.w_theoretical(10000, 32, 0) == pytest.approx(8822.81, abs=0.005)
    assert caqwbh.w_theoretical(10000, 32, 1) == pytest.approx(1107.18, abs=0.005)


def test_omega():
    assert caqwbh.omega(b"\x00\xff", b"\x00\xee") == 1


def test_birthday_bound():
    assert caqwbh.birthday_bound(256) == pytest.approx(3.4028e38, rel=1e-4)
    exact = caqwbh.birthday_bound_exact(256)
    assert exact == "340282366920938463463374607431768211456"
