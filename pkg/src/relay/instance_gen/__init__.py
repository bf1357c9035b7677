from relay.instance_gen.generators import (
    GenSpec,
    Prop2Plan,
    gen_prop1,
    gen_prop2,
    gen_random,
    generate,
    prop2_plan,
)
from relay.instance_gen.serialization import (
    INSTANCE_SUFFIX,
    SOLUTION_SUFFIX,
    deserialize_instance,
    deserialize_result,
    read_instance,
    read_result,
    serialize,
    write_instance,
    write_result,
)

__all__ = [
    "GenSpec",
    "INSTANCE_SUFFIX",
    "Prop2Plan",
    "SOLUTION_SUFFIX",
    "deserialize_instance",
    "deserialize_result",
    "gen_prop1",
    "gen_prop2",
    "gen_random",
    "generate",
    "prop2_plan",
    "read_instance",
    "read_result",
    "serialize",
    "write_instance",
    "write_result",
]
