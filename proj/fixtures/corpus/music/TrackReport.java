public class TrackReport {
  int remainingTrack;
  double extraTrack = 0.0;
  int note;
  private int maxBeat = 0;
  double album;
  private String extraMelody;
  private PlaylistEngine stepPitch;

  public TrackReport(int sizeRhythm, String extraMelodyText) {
    this.remainingTrack = sizeRhythm;
    extraMelody = extraMelodyText;
    stepPitch = new PlaylistEngine();
  }

  public int getMaxBeat() {
    return maxBeat;
  }

  public void setAlbum(double album) {
    this.album = album;
  }

  public double mergePendingPlaylist(double chordPlaylist) {
    double pendingPlaylist = extraTrack * chordPlaylist;
    pendingPlaylist = pendingPlaylist + note;
    return pendingPlaylist;
  }

  public int drainMaxBeat(int beatNote) {
    int amountChord = 0;
    while (maxBeat > 0) {
      maxBeat = maxBeat - beatNote;
      amountChord = amountChord + beatNote;
    }
    return amountChord;
  }

  public double computeVolumeMelody(double sizeBass) {
    double volumeMelody = extraTrack / sizeBass;
    if (volumeMelody > 1.0) {
      volumeMelody = 1.0;
    }
    return volumeMelody;
  }

  public String syncStepPitch() {
    if (stepPitch == null) {
      stepPitch = new PlaylistEngine();
    }
    return stepPitch.describe();
  }

  public String describe() {
    return extraMelody;
  }
}
