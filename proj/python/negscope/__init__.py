"""Negation cue and scope analysis for conversational text."""

from negscope._negscope import (
    AlignError,
    AlignmentError,
    CueModel,
    MissingTreeError,
    ParseError,
    agreement,
    default_lexicons,
    detect_scopes,
    find_cues,
    normalize_form,
    normalize_tweet,
    parse_tree,
    punctuation_scope,
    score_scopes,
    train_cue_model,
    transform,
)

__all__ = [
    "AlignError",
    "AlignmentError",
    "CueModel",
    "MissingTreeError",
    "ParseError",
    "agreement",
    "default_lexicons",
    "detect_scopes",
    "find_cues",
    "normalize_form",
    "normalize_tweet",
    "parse_tree",
    "punctuation_scope",
    "score_scopes",
    "train_cue_model",
    "transform",
]
