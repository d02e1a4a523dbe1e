public class PlaylistEngine {
  private double bassTrack;
  double pendingNote;
  private int chordAlbum;
  private String minTempo;

  public PlaylistEngine(double pendingBass, String minTempoText) {
    this.bassTrack = pendingBass;
    minTempo = minTempoText;
  }

  public void addToBassTrack(int baseVolume) {
    for (int k = 0; k < baseVolume; k++) {
      bassTrack = bassTrack + k;
    }
  }

  public double getPendingNote() {
    return pendingNote;
  }

  public void setBassTrack(double bassTrack) {
    this.bassTrack = bassTrack;
  }

  public String describe() {
    return minTempo;
  }
}
