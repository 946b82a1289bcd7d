import pytest

from spoofscan.membership import ProductClass, membership_bruteforce
from spoofscan.search import (
    Checkpoint,
    IntegrityError,
    SearchConfig,
    read_checkpoint,
    read_results,
    resume,
    search_range,
)


def run(tmp_path, name="out.txt", **kwargs):
    kwargs.setdefault("segment_span", 1024)
    config = SearchConfig(results_path=tmp_path / name, **kwargs)
    records = search_range(config)
    return config, records


def test_limit_10(tmp_path):
    _, records = run(tmp_path, limit=10)
    assert [(r.n, r.x, r.product_class) for r in records] == [
        (1, 1, ProductClass.UNIT),
        (3, 2, ProductClass.EVEN_SPOOF),
    ]


def test_limit_100(tmp_path):
    _, records = run(tmp_path, limit=100)
    assert [(r.n, r.x) for r in records] == [(1, 1), (3, 2), (15, 4)]


def test_results_file_format(tmp_path):
    config, records = run(tmp_path, limit=100)
    text = (tmp_path / "out.txt").read_text()
    assert text == "#spoofscan v1 limit=100\n1\t1\tUNIT\n3\t2\tEVEN_SPOOF\n15\t4\tEVEN_SPOOF\n"
    limit, parsed = read_results(config.results_path)
    assert limit == 100
    assert parsed == records


def test_matches_bruteforce_to_1e4(tmp_path):
    _, records = run(tmp_path, limit=10**4)
    assert records == membership_bruteforce(10**4)


def test_deterministic_across_workers_and_spans(tmp_path):
    reference = None
    for name, workers, span in [
        ("a.txt", 1, 2048),
        ("b.txt", 4, 2048),
        ("c.txt", 4, 8192),
        ("d.txt", 3, 1024),
    ]:
        config = SearchConfig(
            limit=10**5, results_path=tmp_path / name, worker_count=workers, segment_span=span
        )
        search_range(config)
        data = (tmp_path / name).read_bytes()
        if reference is None:
            reference = data
        assert data == reference, name


def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        SearchConfig(limit=0, results_path=tmp_path / "x.txt")
    with pytest.raises(ValueError):
        SearchConfig(limit=10, results_path=tmp_path / "x.txt", worker_count=0)
    with pytest.raises(ValueError):
        SearchConfig(limit=10, results_path=tmp_path / "x.txt", segment_span=512)


def test_checkpoint_written_and_complete(tmp_path):
    config = SearchConfig(
        limit=10**4,
        results_path=tmp_path / "out.txt",
        checkpoint_path=tmp_path / "cp.txt",
        segment_span=1024,
    )
    search_range(config)
    cp = read_checkpoint(config.checkpoint_path)
    assert cp.limit == 10**4
    assert cp.next_lo > 10**4
    assert cp.found_count == 15


def test_interrupt_and_resume_byte_identical(tmp_path):
    full_config = SearchConfig(limit=10**5, results_path=tmp_path / "full.txt", segment_span=1024)
    search_range(full_config)
    expected = (tmp_path / "full.txt").read_bytes()

    config = SearchConfig(
        limit=10**5,
        results_path=tmp_path / "part.txt",
        checkpoint_path=tmp_path / "cp.txt",
        segment_span=1024,
        worker_count=2,
    )
    partial = search_range(config, stop_after_segments=20)
    cp = read_checkpoint(config.checkpoint_path)
    assert cp.next_lo == 1 + 2 * 20 * 1024
    partial_bytes = (tmp_path / "part.txt").read_bytes()
    assert partial_bytes != expected  # genuinely unfinished
    assert expected.startswith(partial_bytes)  # flushed output is a prefix
    assert len(partial) == cp.found_count

    records = resume(config)
    assert (tmp_path / "part.txt").read_bytes() == expected
    assert records == search_range(full_config)  # same record list as a fresh run


def test_resume_completed_checkpoint_is_noop(tmp_path):
    config = SearchConfig(
        limit=10**4,
        results_path=tmp_path / "out.txt",
        checkpoint_path=tmp_path / "cp.txt",
    )
    records = search_range(config)
    before = (tmp_path / "out.txt").read_bytes()
    assert resume(config) == records
    assert (tmp_path / "out.txt").read_bytes() == before


def test_resume_detects_found_count_mismatch(tmp_path):
    config = SearchConfig(
        limit=10**5,
        results_path=tmp_path / "out.txt",
        checkpoint_path=tmp_path / "cp.txt",
        segment_span=1024,
    )
    search_range(config, stop_after_segments=10)
    cp = read_checkpoint(config.checkpoint_path)
    (config.checkpoint_path).write_text(
        f"limit={cp.limit}\nnext={cp.next_lo}\nfound={cp.found_count + 1}\n"
    )
    with pytest.raises(IntegrityError, match="found"):
        resume(config)


def test_resume_detects_limit_mismatch(tmp_path):
    config = SearchConfig(
        limit=10**4,
        results_path=tmp_path / "out.txt",
        checkpoint_path=tmp_path / "cp.txt",
    )
    search_range(config, stop_after_segments=1)
    other = SearchConfig(
        limit=2 * 10**4,
        results_path=tmp_path / "out.txt",
        checkpoint_path=tmp_path / "cp.txt",
    )
    with pytest.raises(IntegrityError, match="limit"):
        resume(other)


def test_resume_requires_checkpoint_path(tmp_path):
    config = SearchConfig(limit=10, results_path=tmp_path / "out.txt")
    with pytest.raises(ValueError):
        resume(config)


def test_read_results_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("#spoofscan v1 limit=100\n1\t1\n")
    with pytest.raises(ValueError, match="line 2"):
        read_results(bad)
    bad.write_text("not a results file\n")
    with pytest.raises(ValueError, match="line 1"):
        read_results(bad)
    bad.write_text("#spoofscan v1 limit=100\n3\t2\tEVEN_SPOOF\n1\t1\tUNIT\n")
    with pytest.raises(ValueError, match="ascending"):
        read_results(bad)


def test_checkpoint_round_trip(tmp_path):
    path = tmp_path / "cp.txt"
    path.write_text("limit=100\nnext=51\nfound=3\n")
    assert read_checkpoint(path) == Checkpoint(limit=100, next_lo=51, found_count=3)
    path.write_text("limit=100\n")
    with pytest.raises(IntegrityError):
        read_checkpoint(path)
