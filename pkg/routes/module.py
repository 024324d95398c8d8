"""module check | hom | end | brick | indec | iso."""
from engine.representations import (check_module, end_structure, hom_basis, is_brick,
                                    is_indecomposable, is_isomorphic)
from routes import (EXIT_OK, EXIT_VERIFICATION_FAILED, CommandGroup, context_algebra,
                    context_module, context_second_module)

module_group = CommandGroup('module', help='representations and their morphisms')


@module_group.command('check', help='evaluate every relation on the module')
def check(args):
    alg = context_algebra(args)
    report = check_module(context_module(args, alg))
    return report, EXIT_OK if report['valid'] else EXIT_VERIFICATION_FAILED


@module_group.command('hom', help='basis of Hom(module, module2)')
def hom(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    w = context_second_module(args, alg, v)
    basis = hom_basis(v, w)
    return {'dim': len(basis), 'basis': [f.to_dict() for f in basis]}, EXIT_OK


@module_group.command('end', help='dimensions of End, its radical and its top')
def end(args):
    alg = context_algebra(args)
    return end_structure(context_module(args, alg)), EXIT_OK


@module_group.command('brick', help='is End(module) the ground field')
def brick(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    return {'brick': is_brick(v), 'end': end_structure(v)}, EXIT_OK


@module_group.command('indec', help='indecomposability from the top of End(module)')
def indec(args):
    alg = context_algebra(args)
    return is_indecomposable(context_module(args, alg), seed=args.seed), EXIT_OK


@module_group.command('iso', help='isomorphism test with an explicit witness')
def iso(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    w = context_second_module(args, alg, v)
    return is_isomorphic(v, w, seed=args.seed).to_dict(), EXIT_OK
