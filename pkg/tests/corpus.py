"""Fifty statements covering every production of the statement grammar."""

CORPUS = [
    "count({}) = 0",
    "count({shape=circle}) < 2",
    "count({shape=square}) <= 3",
    "count({shape=triangle}) != 1",
    "count({color=red}) >= 2",
    "count({color=blue}) > 0",
    "count({color=yellow, shape=circle}) = 4",
    "count({size<0.1}) > 1",
    "count({size<=0.25, color=red}) = 2",
    "count({size=0.125}) = 0",
    "count({size!=0.2}) >= 1",
    "count({size>=0.05, shape=square, color=blue}) < 5",
    "count({size>0.3}) = 0",
    "count({region=left_half}) = count({region=right_half})",
    "count({region=upper_half}) > count({region=lower_half})",
    "count({color=yellow}) > count({shape=circle})",
    "count({color=red, shape=triangle}) = 4",
    "exists({})",
    "exists({shape=square, region=left_half})",
    "not exists({color=blue})",
    "forall({shape=circle}, {color=red})",
    "forall({}, {size<0.2})",
    "forall({region=upper_half}, {shape=triangle, color=yellow})",
    "rel({color=red}, {color=blue}, left_of)",
    "rel({shape=circle}, {shape=square}, right_of)",
    "rel({}, {}, above)",
    "rel({size>0.1}, {size<=0.1}, below)",
    "rel({color=yellow}, {color=yellow}, touching)",
    "two_disjoint_pairs(shape_equal; same; different)",
    "two_disjoint_pairs(shape_equal; same; same)",
    "two_disjoint_pairs(shape_equal; different; different)",
    "two_disjoint_pairs(shape_equal; different; same)",
    "circular_arrangement(0.08)",
    "circular_arrangement(0.1)",
    "circular_arrangement(1)",
    "proximity_groups = 2",
    "proximity_groups >= 1",
    "proximity_groups < 4",
    "exists({}) and exists({shape=circle})",
    "exists({}) or exists({shape=circle})",
    "not (exists({}) and exists({shape=circle}))",
    "not not exists({})",
    "(exists({}))",
    "exists({}) and exists({}) and exists({})",
    "exists({}) or exists({}) or exists({}) and not exists({})",
    "(exists({}) or exists({})) and (count({}) > 1 or proximity_groups = 1)",
    "not (two_disjoint_pairs(shape_equal; same; same) or circular_arrangement(0.05))",
    "count({shape=triangle}) = 2 and count({shape=circle}) = 2 and "
    "not (count({shape=triangle, color=red}) = 2) and count({shape=circle, color=blue}) = 2",
    "forall({color=red}, {region=left_half}) and forall({color=blue}, {region=right_half})",
    "exists({shape=circle})\n\tand\n  rel({shape=circle}, {shape=square}, touching)",
]
