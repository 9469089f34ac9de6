import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridfree.sequences import (
    BFile,
    BFileFormatError,
    build_mod_image,
    compare_sequence,
    emit_mod_image,
    flatten_triangle,
    gray_level,
    load_bfile,
    parse_bfile,
    render_bfile,
)
from gridfree.transfer import dp_table

from golden import MOD3_TABLE1, TABLE1


def test_parse_basic():
    b = parse_bfile("0 1\n1 1\n2 2\n")
    assert b.entries == ((0, 1), (1, 1), (2, 2))
    assert b.values == (1, 1, 2)
    assert b.first_index == 0
    assert len(b) == 3


def test_parse_comments_and_offset():
    b = parse_bfile("# comment\n\n5 38\n6 16\n")
    assert b.entries == ((5, 38), (6, 16))
    assert b.first_index == 5


def test_parse_negative_values_allowed():
    assert parse_bfile("-1 7\n0 -3\n").entries == ((-1, 7), (0, -3))


def test_parse_errors():
    with pytest.raises(BFileFormatError, match="line 2"):
        parse_bfile("0 1\n1 2 3\n")
    with pytest.raises(BFileFormatError, match="line 1"):
        parse_bfile("zero one\n")
    with pytest.raises(BFileFormatError, match="does not follow"):
        parse_bfile("0 1\n2 4\n")
    with pytest.raises(BFileFormatError, match="no entries"):
        parse_bfile("# nothing here\n")


def test_render_roundtrip_simple():
    b = BFile(sequence_id="A000000", entries=((3, 10), (4, -2), (5, 0)))
    assert parse_bfile(render_bfile(b), sequence_id="A000000") == b


@settings(max_examples=40, deadline=None)
@given(
    start=st.integers(-5, 1000),
    values=st.lists(st.integers(-(10 ** 30), 10 ** 30), min_size=1, max_size=25),
)
def test_render_roundtrip_property(start, values):
    b = BFile(
        sequence_id="", entries=tuple((start + i, v) for i, v in enumerate(values))
    )
    assert parse_bfile(render_bfile(b)) == b


def test_load_bfile_infers_id(tmp_path):
    p = tmp_path / "b000045.txt"
    p.write_text("0 0\n1 1\n2 1\n3 2\n")
    b = load_bfile(p)
    assert b.sequence_id == "A000045"
    q = tmp_path / "custom.txt"
    q.write_text("0 1\n")
    assert load_bfile(q).sequence_id == ""


def test_flatten_triangle_examples():
    assert flatten_triangle(2, 2) == [1, 1, 2, 1, 4, 2]
    assert flatten_triangle(3, 1) == [1, 1, 3, 1]
    assert flatten_triangle(2, 6) == [v for row in TABLE1 for v in row]
    with pytest.raises(ValueError):
        flatten_triangle(4, 3)
    with pytest.raises(ValueError):
        flatten_triangle(2, -1)


def test_flatten_matches_reference_file(data_dir):
    reference = load_bfile(data_dir / "b035607.txt")
    computed = flatten_triangle(2, 6)
    report = compare_sequence(computed, reference, offset=reference.first_index)
    assert report.passed


def test_compare_sequence_alignment():
    ref = BFile(sequence_id="X", entries=((5, 38), (6, 16), (7, 2)))
    assert compare_sequence([38, 16, 2], ref, offset=5).passed
    assert compare_sequence([16], ref, offset=6).passed
    report = compare_sequence([38, 99], ref, offset=5)
    assert not report.passed
    assert report.failures == [("index=6", 16, 99)]


def test_compare_sequence_errors():
    ref = BFile(sequence_id="X", entries=((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        compare_sequence([1, 2, 3], ref, offset=0)   # runs past the end
    with pytest.raises(ValueError):
        compare_sequence([1], ref, offset=-1)        # starts before it
    with pytest.raises(ValueError):
        compare_sequence([], ref, offset=0)


def test_gray_levels():
    assert [gray_level(r, 3) for r in range(3)] == [255, 128, 0]
    assert [gray_level(r, 2) for r in range(2)] == [255, 0]
    levels5 = [gray_level(r, 5) for r in range(5)]
    assert levels5[0] == 255 and levels5[-1] == 0
    assert levels5 == sorted(levels5, reverse=True)
    with pytest.raises(ValueError):
        gray_level(3, 3)
    with pytest.raises(ValueError):
        gray_level(0, 1)


def test_build_mod_image_single_pixel():
    img = build_mod_image(1, 3)
    assert img.pixels == (bytes([128]),)   # T(2,0;0) = 1 -> residue 1
    assert img.to_pgm() == b"P5\n1 1\n255\n" + bytes([128])


def test_build_mod_image_top_corner_matches_table():
    img = build_mod_image(7, 3)
    level = {0: 255, 1: 128, 2: 0}
    for n in range(7):
        expected = bytes(
            [level[r] for r in MOD3_TABLE1[n]] + [255] * (7 - n - 1)
        )
        assert img.pixels[n] == expected


def test_build_mod_image_against_exact_table():
    rows = 20
    img = build_mod_image(rows, 3)
    exact = dp_table(2, rows - 1)
    for n in range(rows):
        for k in range(rows):
            want = gray_level(exact[n][k] % 3, 3) if k <= n else 255
            assert img.pixels[n][k] == want


def test_emit_mod_image_deterministic(tmp_path):
    p1, p2 = tmp_path / "a.pgm", tmp_path / "b.pgm"
    img = emit_mod_image(16, 3, p1)
    emit_mod_image(16, 3, p2)
    data = p1.read_bytes()
    assert data == p2.read_bytes()
    assert data.startswith(b"P5\n16 16\n255\n")
    assert len(data) == len(b"P5\n16 16\n255\n") + 16 * 16
    assert img.rows == 16 and img.modulus == 3


def test_emit_mod_image_validation(tmp_path):
    with pytest.raises(ValueError):
        emit_mod_image(0, 3, tmp_path / "x.pgm")
    with pytest.raises(ValueError):
        emit_mod_image(4, 1, tmp_path / "x.pgm")
    with pytest.raises(OSError):
        emit_mod_image(4, 3, tmp_path / "missing" / "x.pgm")
