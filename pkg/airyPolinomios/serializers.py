from rest_framework import serializers

from .models import CorridaVerificacion, RegistroChequeo


# =========================================================
# SALIDAS DE CÁLCULO (CLI Y API)
# =========================================================

class CheckRecordSerializer(serializers.Serializer):
    """Registro plano de la suite; los nombres de campo son estables."""

    check = serializers.CharField()
    family = serializers.CharField(allow_blank=True)
    n = serializers.IntegerField(allow_null=True)
    status = serializers.CharField()
    lhs = serializers.CharField(allow_blank=True)
    rhs = serializers.CharField(allow_blank=True)
    rel_err = serializers.FloatField(allow_null=True)


class FilaPQSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    P = serializers.CharField()
    Q = serializers.CharField()


class FilaRSTSerializer(serializers.Serializer):
    n = serializers.IntegerField()
    R = serializers.CharField()
    S = serializers.CharField()
    T = serializers.CharField()


class EvaluacionSerializer(serializers.Serializer):
    target = serializers.CharField()
    n = serializers.IntegerField()
    x = serializers.FloatField()
    value = serializers.FloatField()
    polinomios = serializers.DictField(child=serializers.CharField())


class FilaCerosSerializer(serializers.Serializer):
    family = serializers.CharField()
    n = serializers.IntegerField()
    degree = serializers.IntegerField()
    real_roots = serializers.IntegerField()
    negative_roots = serializers.IntegerField()
    positive_roots = serializers.IntegerField()
    simple = serializers.BooleanField()


class MuestraSerializer(serializers.Serializer):
    a = serializers.FloatField()
    value = serializers.FloatField(allow_null=True)


# =========================================================
# CORRIDAS GUARDADAS
# =========================================================

class RegistroChequeoSerializer(serializers.ModelSerializer):
    check = serializers.CharField(source='chequeo')

    class Meta:
        model = RegistroChequeo
        fields = ['check', 'family', 'n', 'status', 'lhs', 'rhs', 'rel_err', 'detail']


class CorridaVerificacionSerializer(serializers.ModelSerializer):
    registros = RegistroChequeoSerializer(many=True, read_only=True)

    class Meta:
        model = CorridaVerificacion
        fields = ['id_corrida', 'fecha', 'semilla', 'n_max', 'veredicto',
                  'total_chequeos', 'fallidos', 'duracion', 'registros']
