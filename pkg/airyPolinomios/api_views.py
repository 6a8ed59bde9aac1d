from django.conf import settings
from rest_framework import status, viewsets
from rest_framework.permissions import AllowAny
from rest_framework.response import Response

from . import services
from .errores import ErrorDominio
from .forms import CerosForm, EvaluarForm, TablasForm
from .models import CorridaVerificacion
from .serializers import (
    CorridaVerificacionSerializer, EvaluacionSerializer, FilaCerosSerializer,
    FilaPQSerializer, FilaRSTSerializer,
)


def _error(detalle):
    return Response(detalle, status=status.HTTP_400_BAD_REQUEST)


# =========================================================
# ENDPOINTS DE CÁLCULO (PÚBLICOS)
# =========================================================

class TablasViewSet(viewsets.ViewSet):
    """GET /api/tablas/?familias=PQ|RST&n_max=N"""

    permission_classes = [AllowAny]

    def list(self, request):
        form = TablasForm(request.query_params)
        if not form.is_valid():
            return _error(form.errors)
        datos = form.cleaned_data
        serializadores = {'PQ': FilaPQSerializer, 'RST': FilaRSTSerializer}
        tablas = services.tablas_solicitadas(datos['familias'], datos['n_max'])
        return Response({
            tabla: serializadores[tabla](filas, many=True).data for tabla, filas in tablas.items()
        })


class EvaluarViewSet(viewsets.ViewSet):
    """GET /api/evaluar/?target=Ai&n=2&x=1.0"""

    permission_classes = [AllowAny]

    def list(self, request):
        form = EvaluarForm(request.query_params)
        if not form.is_valid():
            return _error(form.errors)
        datos = form.cleaned_data
        try:
            resultado = services.evaluar(datos['target'], datos['n'], datos['x'])
        except ErrorDominio as e:
            return _error({'detail': str(e)})
        return Response(EvaluacionSerializer(resultado).data)


class CerosViewSet(viewsets.ViewSet):
    """GET /api/ceros/?n_max=N&familias=PQZ"""

    permission_classes = [AllowAny]

    def list(self, request):
        form = CerosForm(request.query_params)
        if not form.is_valid():
            return _error(form.errors)
        datos = form.cleaned_data
        n_max = datos['n_max'] if datos['n_max'] is not None else settings.AIRY_N_MAX_TABLAS_PQ
        filas = services.filas_ceros(n_max, datos['familias'])
        return Response(FilaCerosSerializer(filas, many=True).data)


# =========================================================
# CORRIDAS GUARDADAS (SOLO ADMINISTRADORES)
# =========================================================

class CorridaVerificacionViewSet(viewsets.ReadOnlyModelViewSet):
    queryset = CorridaVerificacion.objects.prefetch_related('registros')
    serializer_class = CorridaVerificacionSerializer
