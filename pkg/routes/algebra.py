"""algebra validate | basis."""
from engine.algebra_builder import (cartan_euler, is_symmetric_algebra, quiver_to_dot,
                                    validate_special_biserial)
from routes import EXIT_OK, CommandGroup, context_algebra

algebra_group = CommandGroup('algebra', help='bound quiver algebras')


@algebra_group.command('validate', help='build the algebra and report its structure')
def validate(args):
    alg = context_algebra(args)
    payload = {
        'valid': True,
        'field': alg.field.to_dict(),
        'vertices': list(alg.vertices),
        'arrows': len(alg.quiver.arrows),
        'dimension': alg.dimension,
        'nilpotency_degree': alg.nilpotency_degree,
        'hereditary': alg.is_hereditary,
        'special_biserial': validate_special_biserial(alg),
        'symmetric': is_symmetric_algebra(alg, seed=args.seed),
    }
    if args.dot:
        payload['dot'] = quiver_to_dot(alg.quiver)
    return payload, EXIT_OK


@algebra_group.command('basis', help='normal-form basis paths and the Cartan matrix')
def basis(args):
    alg = context_algebra(args)
    payload = alg.summary()
    payload.update(cartan_euler(alg, euler=alg.is_hereditary))
    if args.dot:
        payload['dot'] = quiver_to_dot(alg.quiver)
    return payload, EXIT_OK
