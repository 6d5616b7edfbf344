from .matrix_group import MatrixGroup, common_tower
from .characters import (
    Character, LinearCharacter, PowerCharacters, character, power_characters, dual, product, inner_product,
    is_selfdual, multiplicity, multiplicity_vector, order2_linear_characters, repring_identity_check,
    trivial_character
)
from .isotypic import (
    IsotypicDatum, isotypic_split, centralizer_dimension, check_conductor, component_basis, element_images,
    generator_images, over_splitting_field
)
from .witt import WittWitness, witt_index, witt_witness
