"""tau translate | homogeneous | coxeter."""
from engine.ar_translate import coxeter_check, homogeneous_tube_membership, tau
from routes import EXIT_OK, EXIT_VERIFICATION_FAILED, CommandGroup, context_algebra, context_module

tau_group = CommandGroup('tau', help='the Auslander-Reiten translate')


@tau_group.command('translate', help='τ of the module as D Tr')
def translate(args):
    alg = context_algebra(args)
    v = context_module(args, alg)
    result = tau(v)
    return {'dims': v.dim_vector, 'tau_dims': result.dim_vector, 'module': result.to_dict()}, EXIT_OK


@tau_group.command('homogeneous', help='is τ(module) isomorphic to the module')
def homogeneous(args):
    alg = context_algebra(args)
    return homogeneous_tube_membership(context_module(args, alg), seed=args.seed), EXIT_OK


@tau_group.command('coxeter', help='compare Φ·dimvec with dimvec τ on a path algebra')
def coxeter(args):
    alg = context_algebra(args)
    report = coxeter_check(alg, context_module(args, alg))
    return report, EXIT_OK if report['agrees'] else EXIT_VERIFICATION_FAILED
