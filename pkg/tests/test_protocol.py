"""
Tests for the confirmation and complete-decoding protocols.
"""

import pytest

from pydilworth.base import Limits
from pydilworth.digraph import closure_graph
from pydilworth.exact import Coloring, chromatic_number
from pydilworth.families import generate_family
from pydilworth.products import and_power
from pydilworth.protocol import (
    ChannelModel,
    channel_outputs,
    confirm_protocol_check,
    decode_candidates,
    decode_protocol_check,
    message_length_table,
    simulate_transcripts,
)


def test_confirmation_on_single_edge(single_edge):
    check = confirm_protocol_check(ChannelModel(single_edge), 1, Coloring((0, 1)))
    assert check.passed
    assert check.pairs_checked == 3
    assert check.counterexample is None


def test_improper_coloring_rejected(single_edge):
    ch = ChannelModel(single_edge)
    with pytest.raises(ValueError, match="not a proper coloring"):
        confirm_protocol_check(ch, 1, Coloring((0, 0)))

    check = confirm_protocol_check(ch, 1, Coloring((0, 0)), require_proper=False)
    assert not check
    assert check.counterexample == {"sent": "0", "received": "1", "kind": "false confirmation"}


def test_merged_colors_break_confirmation(single_edge):
    ch = ChannelModel(single_edge)
    # height layering of the square: 00 | 01, 10 | 11
    assert confirm_protocol_check(ch, 2, Coloring((0, 1, 1, 2)))
    check = confirm_protocol_check(ch, 2, Coloring((0, 0, 0, 1)), require_proper=False)
    assert check.counterexample["sent"] == "00"
    assert check.counterexample["received"] == "01"


CHANNELS = {"C": ("C", 3), "L": ("L",), "V": ("V",)}


def _channel_graph(tag):
    return generate_family(*CHANNELS[tag])


def _merge_top_color(coloring):
    coloring = coloring.normalized()
    top = max(coloring.colors)
    return Coloring(tuple(0 if c == top else c for c in coloring.colors))


@pytest.mark.parametrize("tag", ["C", "L", "V"])
@pytest.mark.parametrize("t", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_optimal_colorings_confirm(tag, t, limits):
    G = _channel_graph(tag)
    coloring = chromatic_number(and_power(G, t), limits=limits).certificate
    assert confirm_protocol_check(ChannelModel(G), t, coloring, limits=limits).passed


@pytest.mark.parametrize("tag", ["C", "L", "V"])
@pytest.mark.parametrize("t", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_confirmation_fails_with_one_color_fewer(tag, t, limits):
    G = _channel_graph(tag)
    coloring = chromatic_number(and_power(G, t), limits=limits).certificate
    merged = _merge_top_color(coloring)
    assert merged.k == coloring.k - 1
    check = confirm_protocol_check(ChannelModel(G), t, merged, require_proper=False, limits=limits)
    assert not check.passed
    assert check.counterexample is not None


@pytest.mark.parametrize("tag", ["C", "L", "V"])
@pytest.mark.parametrize("t", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
def test_decoding_sound_and_fails_with_one_color_fewer(tag, t, limits):
    G = _channel_graph(tag)
    ch = ChannelModel(G)
    coloring = chromatic_number(and_power(closure_graph(G), t), limits=limits).certificate
    assert decode_protocol_check(ch, t, coloring, limits=limits).passed
    check = decode_protocol_check(ch, t, _merge_top_color(coloring), require_proper=False, limits=limits)
    assert not check.passed
    assert check.counterexample is not None


def test_decoding_on_collision_channel(collision):
    ch = ChannelModel(collision)
    check = decode_protocol_check(ch, 1, Coloring((0, 1, 2)))
    assert check.passed
    assert check.pairs_checked == 5


def test_decoding_with_shared_color(collision):
    ch = ChannelModel(collision)
    with pytest.raises(ValueError, match="closure"):
        decode_protocol_check(ch, 1, Coloring((0, 0, 1)))

    check = decode_protocol_check(ch, 1, Coloring((0, 0, 1)), require_proper=False)
    assert not check.passed
    assert check.counterexample == {"sent": "0", "received": "2", "candidates": ["0", "1"]}


def test_decode_candidates(collision):
    ch = ChannelModel(collision)
    assert ch.inputs_of(2) == [0, 1, 2]
    assert decode_candidates(ch, (2,), 0, (0, 0, 1)) == [(0,), (1,)]
    assert decode_candidates(ch, (2,), 1, (0, 0, 1)) == [(2,)]


def test_message_length_table(single_edge, collision):
    table = message_length_table(ChannelModel(single_edge), 3)
    assert list(table["chi"]) == [2, 3, 4]
    assert list(table["bits"]) == [1, 2, 2]
    assert list(table["status"]) == ["optimal"] * 3

    decode = message_length_table(ChannelModel(collision), 1, "decode")
    assert decode.iloc[0]["bits"] == 2

    with pytest.raises(ValueError, match="Unknown variant"):
        message_length_table(ChannelModel(single_edge), 1, "broadcast")


def test_exhaustive_limit(single_edge):
    with pytest.raises(ValueError, match="exhaustive limit"):
        confirm_protocol_check(ChannelModel(single_edge), 2, Coloring((0, 1, 1, 2)), limits=Limits(exhaustive_max=3))


def test_coloring_length_checked(single_edge):
    with pytest.raises(ValueError, match="expected 4"):
        confirm_protocol_check(ChannelModel(single_edge), 2, Coloring((0, 1)))


def test_channel_outputs(single_edge):
    assert channel_outputs(ChannelModel(single_edge), (0, 0)) == {(0, 0), (0, 1), (1, 0), (1, 1)}
    assert channel_outputs(ChannelModel(single_edge), (1,)) == {(1,)}
    seeded = channel_outputs(ChannelModel(single_edge, "seeded", 3), (0, 0))
    assert len(seeded) == 1
    with pytest.raises(ValueError, match="out of range"):
        channel_outputs(ChannelModel(single_edge), (2,))
    with pytest.raises(ValueError, match="Unknown channel mode"):
        ChannelModel(single_edge, "noisy")


def test_simulated_transcripts_are_reproducible(single_edge):
    ch = ChannelModel(single_edge)
    coloring = Coloring((0, 1, 1, 2))
    first = simulate_transcripts(ch, 2, coloring, 12, seed=7)
    assert first == simulate_transcripts(ch, 2, coloring, 12, seed=7)
    for record in first:
        assert ch.can_produce(record.sent, record.received)
        assert record.verdict == ("confirm" if record.received == record.sent else "reject")
        assert record.noiseless_msg == coloring.colors[record.sent[0] * 2 + record.sent[1]]
    assert set(first[0].to_dict()) == {"sent", "received", "noiseless_msg", "verdict"}


def test_simulated_decoding(collision):
    ch = ChannelModel(collision)
    for record in simulate_transcripts(ch, 1, Coloring((0, 1, 2)), 8, seed=1, variant="decode"):
        assert record.verdict == record.sent
